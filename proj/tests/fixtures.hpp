#pragma once

#include <string>
#include <vector>

#include "slnweb/slnweb.hpp"

namespace fixtures {

using namespace slnweb;

inline FProgram two_circles() { return {2, 4, 2, {{2, 2}, {1, 1}, {1, 1}, {3, 1}, {3, 1}}}; }
inline FProgram two_circles_alt() { return {2, 3, 1, {{1, 1}, {1, 1}, {2, 1}, {2, 1}}}; }
inline FProgram stacked_circles() { return {2, 3, 1, {{1, 1}, {2, 1}, {1, 1}, {2, 1}}}; }
inline FProgram cup() { return {2, 2, 1, {{1, 1}}}; }

// Circle of color b: split a leash, merge it back.
inline FProgram circle(int n, int b) {
    if (b == n) return {n, 2, 1, {{1, n}}};
    return {n, 2, 1, {{1, b}, {1, n - b}}};
}

inline FProgram sl4_web() {
    return {4, 8, 3,
            {{3, 4}, {4, 4}, {5, 4}, {6, 4}, {2, 4}, {3, 2}, {1, 1}, {2, 1}, {4, 1}, {5, 1},
             {4, 1}, {3, 2}, {4, 2}, {3, 1}, {1, 1}, {2, 1}, {1, 1}, {3, 1}, {7, 2}}};
}

// Flow and tableau on the sl_4 web, components left to right.
inline MultiTableau sl4_flow_tableau() {
    return MultiTableau::from_display(3, {{{1, 2, 3, 4, 19}, {5, 6, 9, 10}, {15, 16, 18}},
                                          {{1, 2, 3, 4}, {5, 6, 11}, {7, 8, 14}},
                                          {{1, 2, 3, 4, 19}, {5, 12, 13}},
                                          {{1, 2, 3, 4}, {5, 12, 13}, {17}}});
}

inline MultiTableau sl4_canonical_tableau() {
    return MultiTableau::from_display(3, {{{1, 2, 3, 4}, {5, 14}},
                                          {{1, 2, 3, 4}, {5, 12, 13}, {17}},
                                          {{1, 2, 3, 4, 19}, {5, 6, 11}, {15, 16, 18}},
                                          {{1, 2, 3, 4, 19}, {5, 6, 9, 10}, {7, 8, 12, 13}}});
}

// n=5 program whose flow gives (0, [1 2], [1 2/4], 0, [3]).
inline FProgram flowtotab_program() { return {5, 4, 2, {{2, 2}, {3, 2}, {2, 1}, {1, 1}}}; }

inline ComponentSet set_of(std::initializer_list<int> xs) {
    ComponentSet c = 0;
    for (int x : xs) c |= ComponentSet{1} << (x - 1);
    return c;
}

inline Flow flowtotab_flow() { return Flow{{set_of({4, 3}), set_of({4, 3}), set_of({1}), set_of({3})}}; }

inline LinkProgram unknot() {
    return {2, 5, 2,
            {FMove{2, 2}, FMove{3, 1}, FMove{4, 1}, FMove{1, 1}, Crossing{2, -1}, FMove{1, 1}, FMove{2, 1},
             FMove{4, 1}}};
}

inline LinkProgram hopf() {
    return {3, 6, 2,
            {FMove{2, 3}, FMove{1, 1}, FMove{3, 1}, FMove{4, 1}, FMove{5, 1}, Crossing{2, 1}, Crossing{3, 1},
             FMove{1, 2}, FMove{2, 2}, FMove{3, 2}, FMove{5, 2}}};
}

inline LaurentPoly hopf_value() {
    return qint(2) * qint(2) * qint(3) * LaurentPoly::q(-2) - qint(2) * qint(3) * LaurentPoly::monomial(-1, 2) +
           qint(3) * qint(3);
}

} // namespace fixtures
