#pragma once

#include "cycloset/clusters.hpp"

#include <optional>
#include <set>

namespace cycloset {

/// One-sided sequence of symbolic points converging to the limit point w.
///
/// dir '+' approaches w from above: the i-th point is (w, start - i).
/// dir '-' approaches w from below: the i-th point is (w - 1, start + i),
/// taken in the interval that ends at w.
struct Tail {
    int limit = 0;
    char dir = '+';
    long long start = 0;

    CirclePoint at(const CyclicPoset& p, long long i) const;
    Tail advanced(long long k) const;
    // index of the interval the points live in
    int interval(int limits) const;
    auto key() const { return std::make_tuple(limit, dir, start); }
    bool operator==(const Tail& o) const { return key() == o.key(); }
};

/// Arcs E(first[i + offset], moving[i]) for i >= 0, where first is a fixed
/// point or a tail.
struct FanFamily {
    std::optional<CirclePoint> fixed;
    Tail first;
    Tail moving;
    long long offset = 0;

    CirclePoint first_at(const CyclicPoset& p, long long i) const;
    Arc arc(const CyclicPoset& p, long long i) const;
    // i >= 0 with arc(i) == a, or nullopt
    std::optional<long long> index_of(const CyclicPoset& p, const Arc& a) const;
    FanFamily advanced(long long k) const;
    bool operator==(const FanFamily& o) const;
    bool operator<(const FanFamily& o) const;
};

struct SymbolicCluster {
    CyclicPoset poset;
    std::vector<Arc> arcs;
    std::vector<FanFamily> families;

    // every explicit arc plus family members with all endpoints |pos| <= w
    std::vector<Arc> materialize(long long w) const;
    // smallest window containing the explicit arcs and family starts
    long long natural_window() const;
    // Same poset shape and the same set of arcs: compared on a window that
    // covers both descriptions, with families compared past that window.
    bool operator==(const SymbolicCluster& o) const;
};

// Offsets folded into the first tail, explicit arcs that extend exactly one
// family backwards absorbed into it, everything sorted.
SymbolicCluster canonicalize(SymbolicCluster s);

struct LocalFiniteness {
    bool ok = true;
    std::optional<CirclePoint> witness;
};

LocalFiniteness is_locally_finite(const SymbolicCluster& s);

// (limit of the first endpoints, limit of the moving endpoints) per family
std::set<std::pair<int, int>> limit_pairs(const SymbolicCluster& s);

bool is_triangulation_cluster(const SymbolicCluster& s, std::string* reason = nullptr);

NoncrossingPartition rho_from_cluster(const SymbolicCluster& s);

// Zig-zag in the G component of Z_2(Z_inf), G_ij = E((0,i), (1,j)).  Corners
// are joined by runs that increase i or decrease j, alternating direction.
SymbolicCluster build_zigzag_cluster(const std::vector<std::pair<long long, long long>>& corners);

// Straight zig-zag through G_00: two-sided fans at both limit points.
SymbolicCluster straight_zigzag_cluster();
// Nested E_{-m,m}, E_{-m,m+1}, F_{-m,m}, F_{-m,m+1} (m >= 1) spanning both limit points.
SymbolicCluster nested_two_limit_cluster();

// Two-sided fans at every limit point plus a fan triangulation of the
// central polygon on (j,-1), (j,0), (j,1).
SymbolicCluster construct_triangulation_cluster(const CyclicPoset& p);

SymbolicCluster mutate_symbolic(const SymbolicCluster& s, const Arc& arc);

struct ArComponent {
    int lo = 0, hi = 0;     // intervals of the endpoints
    std::string label;      // "C_{lo,hi}"
    std::string type;       // "ZA_inf" or "ZA_inf_inf"
};

ArComponent ar_component(const CyclicPoset& p, const Arc& a);
std::vector<Arc> ar_successors(const FrobeniusEngine& e, const Arc& a);
std::vector<Arc> ar_predecessors(const FrobeniusEngine& e, const Arc& a);

// Components C_{ij} that contain infinitely many arcs of s.
std::set<std::pair<int, int>> infinite_components(const SymbolicCluster& s);

struct SimplicialComplexK {
    std::vector<CirclePoint> vertices;
    std::vector<Arc> edges;
    std::vector<std::array<CirclePoint, 3>> triangles;

    long long euler_characteristic() const
    {
        return (long long)vertices.size() - (long long)edges.size() + (long long)triangles.size();
    }
};

SimplicialComplexK complex_K(const SymbolicCluster& s, long long window);

struct SymbolicReport {
    size_t pairs_checked = 0;
    std::vector<std::pair<Arc, Arc>> conflicts;
    bool maximal_in_window = true;
    std::optional<Arc> addable;
    bool ok() const { return conflicts.empty() && maximal_in_window; }
};

// Pairwise compatibility of the materialized arcs (engine), and maximality
// against candidates in the inner half of the window.
SymbolicReport validate_symbolic(const FrobeniusEngine& e, const SymbolicCluster& s, long long window);

} // namespace cycloset
