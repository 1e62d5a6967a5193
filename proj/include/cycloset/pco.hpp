#pragma once

#include "cycloset/poset.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>

namespace cycloset {

using Triple = std::array<int, 3>;

struct PartialCyclicOrder {
    int size = 0;
    std::set<Triple> delta;

    bool contains(int x, int y, int z) const { return delta.count({x, y, z}) > 0; }
};

struct PcoCheck {
    bool ok = true;
    std::string axiom;   // "(a)", "(b)" or "(c)"
    std::vector<Triple> witness;
};

PcoCheck is_partial_cyclic_order(const PartialCyclicOrder& d);

struct PcoResult {
    PartialCyclicOrder order;
    bool identity_i = true;   // c(x,y,z) + c(x,z,y) = r
    bool identity_ii = true;  // both < r implies both > 0
    PcoCheck check;
};

// Delta = { (x,y,z) distinct : c(x,y,z) = r }.  Throws
// CycloError("HypothesisViolated") when r < 2, c exceeds r, or c(x,y,x) != r.
PcoResult pco_from_bounded_cocycle(const CyclicPoset& p, int r);

// (x-y)(y-z)(z-x) > 0 on {0..m-1}
PartialCyclicOrder delta_lin(int m);

// The same order on {1..m-1}; 0 is incomparable to everything.
PartialCyclicOrder delta_lin_isolated_zero(int m);

struct SearchResult {
    enum class Status { Found, Infeasible, Timeout };
    Status status = Status::Infeasible;
    int r = 0;
    // table g(u,v) = c(0,u,v); the cocycle is c(x,y,z) = g(y,z) - g(x,z) + g(x,y)
    std::vector<std::vector<int>> g;
    std::map<std::array<long long, 3>, int> table;
    unsigned long long explored = 0;
    std::vector<int> rejected_r;
};

// Exhaustive search for a reduced bounded cocycle with c(x,y,x) = r and
// c = r exactly on Delta, for r = 2..r_max, all values <= cap.
SearchResult search_bounded_cocycle(const PartialCyclicOrder& d, int r_max, int cap,
                                    unsigned long long budget = 50'000'000ULL);

} // namespace cycloset
