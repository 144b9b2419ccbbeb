#pragma once

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "links.hpp"
#include "webs.hpp"

namespace slnweb {

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return out;
}

inline int parse_int(const Token& tok, std::size_t line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        throw ParseError(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    return v;
}

inline int parse_key(const Token& tok, std::string_view key, std::size_t line) {
    if (tok.text.substr(0, key.size() + 1) != std::string(key) + "=")
        throw ParseError(line, tok.column, "expected '" + std::string(key) + "=<int>'");
    return parse_int(Token{tok.text.substr(key.size() + 1), tok.column + key.size() + 1}, line);
}

} // namespace detail

// Reads the shared text format; crossing lines are accepted here.
inline LinkProgram parse_link_program(std::string_view text) {
    LinkProgram lp;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = detail::split_tokens(line);
        if (toks.empty()) continue;
        const auto& head = toks[0];
        if (head.text == "header") {
            if (have_header) throw ParseError(line_no, head.column, "duplicate header");
            if (toks.size() != 4) throw ParseError(line_no, head.column, "header needs n=, m= and l=");
            lp.n = detail::parse_key(toks[1], "n", line_no);
            lp.m = detail::parse_key(toks[2], "m", line_no);
            lp.ell = detail::parse_key(toks[3], "l", line_no);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, head.column, "expected header line first");
        if (head.text == "F") {
            if (toks.size() != 3) throw ParseError(line_no, head.column, "expected 'F <pos> <power>'");
            lp.items.emplace_back(FMove{detail::parse_int(toks[1], line_no), detail::parse_int(toks[2], line_no)});
        } else if (head.text == "T+" || head.text == "T-") {
            if (toks.size() != 2) throw ParseError(line_no, head.column, "expected 'T+ <pos>' or 'T- <pos>'");
            lp.items.emplace_back(Crossing{detail::parse_int(toks[1], line_no), head.text == "T+" ? 1 : -1});
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + std::string(head.text) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, 1, "missing header line");
    return lp;
}

inline FProgram parse_fprogram(std::string_view text) {
    LinkProgram lp = parse_link_program(text);
    FProgram p{lp.n, lp.m, lp.ell, {}};
    for (const auto& item : lp.items) {
        if (!std::holds_alternative<FMove>(item)) throw SemanticError("web programs may not contain crossings");
        p.moves.push_back(std::get<FMove>(item));
    }
    return p;
}

// Rejects out-of-range headers and moves, killed strings and blocked crossings.
inline void validate(const LinkProgram& lp) {
    check_header(lp.n, lp.m, lp.ell);
    for (const auto& item : lp.items) {
        if (const auto* mv = std::get_if<FMove>(&item)) {
            if (mv->pos < 1 || mv->pos > lp.m - 1) throw SemanticError("move position out of range");
            if (mv->power < 1) throw SemanticError("move power must be positive");
        } else if (const auto* c = std::get_if<Crossing>(&item)) {
            if (c->pos < 1 || c->pos > lp.m - 2) throw SemanticError("crossing position out of range");
        }
    }
    link_weights(lp);
}

inline void validate(const FProgram& p) { validate(to_link_program(p)); }

inline std::string render_program(const LinkProgram& lp) {
    std::ostringstream out;
    out << "header n=" << lp.n << " m=" << lp.m << " l=" << lp.ell << "\n";
    for (const auto& item : lp.items) {
        if (const auto* mv = std::get_if<FMove>(&item))
            out << "F " << mv->pos << " " << mv->power << "\n";
        else {
            const auto& c = std::get<Crossing>(item);
            out << (c.sign > 0 ? "T+ " : "T- ") << c.pos << "\n";
        }
    }
    return out.str();
}

inline std::string render_program(const FProgram& p) { return render_program(to_link_program(p)); }

} // namespace slnweb
