#pragma once

#include "cycloset/frobenius.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cycloset {

// A finite cluster in canonical form: arcs sorted by (smaller, larger) endpoint.
struct Cluster {
    std::vector<Arc> arcs;

    Cluster() = default;
    explicit Cluster(std::vector<Arc> a);

    bool contains(const Arc& a) const;
    uint64_t hash() const;
    std::string hash_hex() const;
    bool operator==(const Cluster& o) const { return arcs == o.arcs; }
    bool operator<(const Cluster& o) const { return arcs < o.arcs; }
};

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ULL);

bool compatible(const FrobeniusEngine& e, const ClusterObject& a, const ClusterObject& b);
bool compatible(const FrobeniusEngine& e, const Arc& a, const Arc& b);

// Nonzero objects E(x,y), x < y, on a finite carrier.
std::vector<Arc> nonzero_arcs(const FrobeniusEngine& e);

// Boundary arcs E(z, z+) that belong to every cluster (phi = id only).
std::vector<Arc> frozen_arcs(const CyclicPoset& p);
bool is_frozen(const CyclicPoset& p, const Arc& a);

struct ClusterCheck {
    bool ok = true;
    std::string defect;
    std::vector<Arc> witness;
};

ClusterCheck is_cluster(const FrobeniusEngine& e, const std::vector<Arc>& arcs);

// All triangulations of a convex polygon on vertices 0..n-1, as diagonal lists.
std::vector<std::vector<std::pair<int, int>>> polygon_triangulations(int n);

std::vector<Cluster> enumerate_clusters(const FrobeniusEngine& e);

struct MutationResult {
    Cluster cluster;
    Arc removed, added;
    // middle term E(x,b) + E(a,y) of 0 -> E(x,y) -> E(x,b)+E(a,y) -> E(a,b) -> 0
    Arc middle_left, middle_right;
};

// Exchange partner of `arc` in the triangulation given by `edges` (polygon
// sides plus diagonals).  Throws FrozenArc when a side has no triangle.
Arc flip_partner(const std::vector<Arc>& edges, const Arc& arc, CirclePoint* a_out = nullptr,
                 CirclePoint* b_out = nullptr);

MutationResult mutation_triangle(const FrobeniusEngine& e, const Cluster& c, const Arc& arc);
Cluster mutate(const FrobeniusEngine& e, const Cluster& c, const Arc& arc);
std::vector<Arc> mutable_arcs(const CyclicPoset& p, const Cluster& c);

struct ExchangeGraph {
    std::vector<Cluster> nodes;
    std::vector<std::pair<size_t, size_t>> edges;
    bool truncated = false;
};

ExchangeGraph exchange_graph(const FrobeniusEngine& e, const Cluster& seed, size_t budget);
std::string to_dot(const ExchangeGraph& g);

struct ClusterQuiver {
    std::vector<Arc> vertices;
    std::vector<bool> frozen;
    // arrows[i][j] = number of arrows i -> j
    std::vector<std::vector<int>> arrows;

    bool has_loops() const;
    bool has_two_cycles() const;
    // b_ij = arrows i->j minus arrows j->i
    std::vector<std::vector<int>> exchange_matrix() const;
};

ClusterQuiver cluster_quiver(const FrobeniusEngine& e, const Cluster& c);
std::vector<std::vector<int>> dwz_mutate(const std::vector<std::vector<int>>& b, size_t k);
bool quiver_mutation_check(const FrobeniusEngine& e, const Cluster& c, const Arc& arc);

struct JReport {
    int n = 0;
    size_t pairs_checked = 0;
    size_t hom_failures = 0;
    size_t clusters_checked = 0;
    size_t cluster_failures = 0;
    size_t shift_intersection = 0;
    bool ok() const { return hom_failures == 0 && cluster_failures == 0; }
};

// J: C_id(Z_n) -> C_phi(Z_2n), E(x_i,x_j) -> E(x_2i,x_2j)
Arc spaced_out_embed(const Arc& a, long long n);
JReport verify_J(int n, EngineOptions opts = {});

// Maximum cliques of the compatibility graph on `candidates`.
struct CliqueSearch {
    std::vector<std::vector<Arc>> maximal;
    size_t largest = 0;
    bool truncated = false;
};

CliqueSearch maximal_compatible_sets(const FrobeniusEngine& e, const std::vector<Arc>& seed,
                                     const std::vector<Arc>& candidates, size_t budget);

} // namespace cycloset
