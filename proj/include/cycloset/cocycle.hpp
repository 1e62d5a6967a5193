#pragma once

#include "cycloset/geometry.hpp"
#include "cycloset/point.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cycloset {

// An equivalence relation on a finite set of embedded points, one class id
// per point.  Points are kept in cyclic (key) order.
struct NoncrossingPartition {
    std::vector<CirclePoint> points;
    std::vector<int> cls;

    static NoncrossingPartition discrete(std::vector<CirclePoint> pts);
    static NoncrossingPartition from_classes(std::vector<CirclePoint> pts,
                                             const std::vector<std::vector<int>>& classes);

    std::vector<std::vector<int>> classes() const;
    int class_count() const;
    bool same(int i, int j) const { return cls[i] == cls[j]; }
};

// B(x,y) = 1 iff the geodesic xy crosses a geodesic ww' with w ~ w', w != w'.
int rho_crossing(const CirclePoint& x, const CirclePoint& y, const NoncrossingPartition& rho);

class CocycleProvider {
public:
    enum class Kind { Winding, Table, Cactus };

    static CocycleProvider winding();
    static CocycleProvider table(std::map<std::array<long long, 3>, int> values);
    static CocycleProvider cactus(const CocycleProvider& base, NoncrossingPartition rho);

    Kind kind() const { return kind_; }
    int operator()(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) const;

    const std::map<std::array<long long, 3>, int>& table_values() const { return table_; }
    const NoncrossingPartition& rho() const { return rho_; }
    const CocycleProvider& base() const { return *base_; }

private:
    Kind kind_ = Kind::Winding;
    std::map<std::array<long long, 3>, int> table_;
    std::shared_ptr<const CocycleProvider> base_;
    NoncrossingPartition rho_;
};

struct Violation {
    std::string axiom;
    std::vector<CirclePoint> witness;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks reducedness, nonnegativity and delta c = 0 on every tuple of the
// carrier.  Missing table entries raise CycloError("MissingEntry").
ValidationReport validate_cocycle(const CocycleProvider& c, const std::vector<CirclePoint>& carrier,
                                  size_t max_witnesses = 16);

// b(x,y) + b(y,z) - b(x,z) as a table on the given carrier (indices).
CocycleProvider cocycle_from_b(const std::vector<std::vector<int>>& b);

} // namespace cycloset
