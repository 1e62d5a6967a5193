#pragma once

#include "cycloset/symbolic.hpp"

#include <array>
#include <cstdint>

namespace cycloset {

struct NoncrossingCheck {
    bool ok = true;
    std::array<int, 4> witness{};  // a,b,c,d in cyclic order with a~c, b~d, a!~b
};

NoncrossingCheck is_noncrossing_partition(const NoncrossingPartition& rho);

// Every noncrossing partition of {0..n-1}, as class ids per element.
std::vector<std::vector<int>> enumerate_noncrossing_partitions(int n);

NoncrossingPartition partition_from_ids(std::vector<CirclePoint> pts, const std::vector<int>& ids);

// Z(Z_inf) with the cocycle c + B(x,y) + B(y,z) - B(x,z).
CyclicPoset cactus_poset(const CyclicPoset& zz, const NoncrossingPartition& rho);

// Classes of the intervals between consecutive points of rho: intervals i, j
// are equivalent iff their representatives are rho-noncrossing.
std::vector<std::vector<int>> rho_classes(const NoncrossingPartition& rho);

struct CactusDisk {
    std::vector<int> intervals;     // original interval ids, increasing
    std::vector<int> marked;        // rho-class of the point opening each interval
    std::vector<int> pinch_points;  // rho-classes of size >= 2 touching the disk
};

struct CactusDecomposition {
    NoncrossingPartition rho;
    std::vector<std::vector<int>> classes;  // interval classes, one per disk
    std::vector<CactusDisk> disks;
    std::vector<std::pair<int, int>> tree;

    int disk_of_interval(int j) const;
};

CactusDecomposition cactus_decompose(const NoncrossingPartition& rho);

bool is_tree(size_t nodes, const std::vector<std::pair<int, int>>& edges);

struct ProductReport {
    size_t objects_checked = 0, object_failures = 0;
    size_t cross_pairs = 0, cross_failures = 0;
    size_t cross_c3_failures = 0;
    size_t within_pairs = 0, within_failures = 0;
    bool ok() const { return object_failures == 0 && cross_failures == 0 && cross_c3_failures == 0 && within_failures == 0; }
};

ProductReport verify_product_decomposition(const CyclicPoset& zz, const NoncrossingPartition& rho, long long window,
                                           size_t samples, uint32_t seed = 1);

struct DiskCluster {
    size_t disk = 0;
    SymbolicCluster cluster;
};

std::vector<DiskCluster> cluster_correspondence(const SymbolicCluster& s);
SymbolicCluster assemble(const CyclicPoset& zz, const CactusDecomposition& d, const std::vector<DiskCluster>& parts);

// Z_10(Z_inf) with classes {0,3,6}, {1,2}, {4,5}, {7,9}, {8}, assembled from
// constructed triangulation clusters on each disk.
SymbolicCluster ten_limit_cactus_cluster();

} // namespace cycloset
