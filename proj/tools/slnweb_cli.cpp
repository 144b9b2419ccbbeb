#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slnweb/slnweb.hpp"

using namespace slnweb;

namespace {

constexpr int kParseError = 2;
constexpr int kSemanticError = 3;
constexpr int kResourceError = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FProgram load_web(const std::string& path) {
    FProgram p = parse_fprogram(read_file(path));
    validate(p);
    return p;
}

LinkProgram load_link(const std::string& path) {
    LinkProgram lp = parse_link_program(read_file(path));
    validate(lp);
    return lp;
}

std::vector<int> parse_colors(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError(1, 1, "bad color '" + tok + "'");
        }
    }
    return out;
}

// "1+ 2- 1+" or "1+,2-"
std::vector<BraidLetter> parse_word(const std::string& text) {
    std::vector<BraidLetter> out;
    std::string norm = text;
    for (char& c : norm)
        if (c == ',') c = ' ';
    std::istringstream in(norm);
    std::string tok;
    while (in >> tok) {
        char sign = tok.back();
        if ((sign != '+' && sign != '-') || tok.size() < 2) throw ParseError(1, 1, "bad braid letter '" + tok + "'");
        try {
            std::size_t used = 0;
            int strand = std::stoi(tok.substr(0, tok.size() - 1), &used);
            if (used != tok.size() - 1) throw std::invalid_argument(tok);
            out.push_back(BraidLetter{strand, sign == '+' ? 1 : -1});
        } catch (const std::exception&) {
            throw ParseError(1, 1, "bad braid letter '" + tok + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum sl_n web and link invariants from ladder programs"};
    app.require_subcommand(1);
    app.fallthrough();

    EvalOptions opt;
    app.add_option("--jobs", opt.jobs, "worker threads for the evaluation")->check(CLI::PositiveNumber);
    app.add_option("--max-states", opt.max_states, "abort when more live shapes than this exist");

    std::string file, file2;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a web program");
    eval_cmd->add_option("file", file)->required();
    auto* shapes_cmd = app.add_subcommand("shapes", "evaluation polynomial per end shape");
    shapes_cmd->add_option("file", file)->required();
    auto* flows_cmd = app.add_subcommand("flows", "boundary states with their tensor coefficients");
    flows_cmd->add_option("file", file)->required();
    auto* canon_cmd = app.add_subcommand("canonical", "canonical tableau and its degree");
    canon_cmd->add_option("file", file)->required();
    auto* dual_cmd = app.add_subcommand("dual-canonical", "decide dual canonicity (exit 0 yes, 1 no)");
    dual_cmd->add_option("file", file)->required();
    bool glued = false;
    auto* pair_cmd = app.add_subcommand("pair", "Kuperberg pairing of two webs with equal boundary");
    pair_cmd->add_option("u", file)->required();
    pair_cmd->add_option("v", file2)->required();
    pair_cmd->add_flag("--glued", glued, "print q^{-d} times the pairing instead");
    auto* link_cmd = app.add_subcommand("link", "unnormalized link polynomial");
    link_cmd->add_option("file", file)->required();
    auto* rt_cmd = app.add_subcommand("rt", "normalized colored link polynomial");
    rt_cmd->add_option("file", file)->required();
    int n = 2;
    std::string colors, word;
    auto* braid_cmd = app.add_subcommand("compile-braid", "emit the link program of a braid closure");
    braid_cmd->add_option("-n", n, "rank")->required();
    braid_cmd->add_option("--colors", colors, "comma separated strand colors")->required();
    braid_cmd->add_option("--word", word, "braid letters such as '1+ 2- 1+'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParseError;
    }

    try {
        if (*eval_cmd) {
            std::cout << ev(load_web(file), opt).render() << "\n";
        } else if (*shapes_cmd) {
            for (const auto& [shape, poly] : ev_by_shape(load_web(file), opt))
                std::cout << shape.render() << " " << poly.render() << "\n";
        } else if (*flows_cmd) {
            for (const auto& [state, poly] : tensor_expansion(load_web(file), opt))
                std::cout << render_state(state) << " " << poly.render() << "\n";
        } else if (*canon_cmd) {
            MultiTableau t = canonical_tableau(load_web(file));
            std::cout << t.render() << "\n" << bkw_degree(t) << "\n";
        } else if (*dual_cmd) {
            LaurentPoly value = ev(load_web(file), opt);
            if (has_positive_exponent_property(value)) {
                std::cout << "dual canonical\n";
                return 0;
            }
            std::cout << "not dual canonical: evaluation " << value.render() << " is not in 1 + qN[q]\n";
            return 1;
        } else if (*pair_cmd) {
            Pairing r = kuperberg(load_web(file), load_web(file2), opt);
            std::cout << (glued ? r.ev_glued : r.pairing).render() << "\n";
        } else if (*link_cmd) {
            std::cout << ev_link(load_link(file), opt).render() << "\n";
        } else if (*rt_cmd) {
            std::cout << rt(load_link(file), opt).render() << "\n";
        } else if (*braid_cmd) {
            std::cout << render_program(compile_braid_closure(n, parse_colors(colors), parse_word(word)));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResourceError;
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kResourceError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemanticError;
    }
    return 0;
}
