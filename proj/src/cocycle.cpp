#include "cycloset/cocycle.hpp"

#include <algorithm>
#include <numeric>

namespace cycloset {

NoncrossingPartition NoncrossingPartition::discrete(std::vector<CirclePoint> pts)
{
    std::sort(pts.begin(), pts.end());
    NoncrossingPartition r;
    r.cls.resize(pts.size());
    std::iota(r.cls.begin(), r.cls.end(), 0);
    r.points = std::move(pts);
    return r;
}

NoncrossingPartition NoncrossingPartition::from_classes(std::vector<CirclePoint> pts,
                                                        const std::vector<std::vector<int>>& classes)
{
    NoncrossingPartition r;
    r.points = std::move(pts);
    r.cls.assign(r.points.size(), -1);
    int next = 0;
    for (const auto& c : classes) {
        for (int i : c) {
            if (i < 0 || i >= (int)r.points.size() || r.cls[i] != -1)
                throw CycloError("InvalidPartition", "class index out of range or repeated");
            r.cls[i] = next;
        }
        ++next;
    }
    for (auto& c : r.cls)
        if (c == -1)
            c = next++;
    for (size_t i = 1; i < r.points.size(); ++i)
        if (!(r.points[i - 1] < r.points[i]))
            throw CycloError("InvalidPartition", "partition points must be sorted and distinct");
    return r;
}

std::vector<std::vector<int>> NoncrossingPartition::classes() const
{
    std::map<int, std::vector<int>> byc;
    for (size_t i = 0; i < cls.size(); ++i)
        byc[cls[i]].push_back((int)i);
    std::vector<std::vector<int>> out;
    for (auto& [k, v] : byc)
        out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

int NoncrossingPartition::class_count() const
{
    return (int)classes().size();
}

int rho_crossing(const CirclePoint& x, const CirclePoint& y, const NoncrossingPartition& rho)
{
    if (x == y)
        return 0;
    // rho.points is sorted, so the chord (p_i, p_j), i < j, crosses (x, y)
    // exactly when one endpoint lies strictly between p_i and p_j
    auto rank = [&](const CirclePoint& z) {
        auto it = std::lower_bound(rho.points.begin(), rho.points.end(), z);
        int r = (int)(it - rho.points.begin());
        bool hit = it != rho.points.end() && *it == z;
        return std::pair{r, hit};
    };
    auto [rx, hx] = rank(x);
    auto [ry, hy] = rank(y);
    int n = (int)rho.points.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rho.cls[i] != rho.cls[j])
                continue;
            if ((hx && (rx == i || rx == j)) || (hy && (ry == i || ry == j)))
                continue;
            bool xin = rx > i && rx <= j && !(hx && rx == j);
            bool yin = ry > i && ry <= j && !(hy && ry == j);
            if (xin != yin)
                return 1;
        }
    return 0;
}

CocycleProvider CocycleProvider::winding()
{
    return CocycleProvider();
}

CocycleProvider CocycleProvider::table(std::map<std::array<long long, 3>, int> values)
{
    CocycleProvider c;
    c.kind_ = Kind::Table;
    c.table_ = std::move(values);
    return c;
}

CocycleProvider CocycleProvider::cactus(const CocycleProvider& base, NoncrossingPartition rho)
{
    CocycleProvider c;
    c.kind_ = Kind::Cactus;
    c.base_ = std::make_shared<const CocycleProvider>(base);
    c.rho_ = std::move(rho);
    return c;
}

static int wind_b(const CirclePoint& x, const CirclePoint& y)
{
    return y < x ? 1 : 0;
}

int CocycleProvider::operator()(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) const
{
    switch (kind_) {
    case Kind::Winding:
        return wind_b(x, y) + wind_b(y, z) - wind_b(x, z);
    case Kind::Table: {
        auto it = table_.find({x.index, y.index, z.index});
        if (it != table_.end())
            return it->second;
        if (x == y || y == z)
            return 0;
        throw CycloError("MissingEntry", "cocycle table has no entry for (" + x.label() + "," +
                                             y.label() + "," + z.label() + ")");
    }
    case Kind::Cactus:
        return (*base_)(x, y, z) + rho_crossing(x, y, rho_) + rho_crossing(y, z, rho_) -
               rho_crossing(x, z, rho_);
    }
    return 0;
}

ValidationReport validate_cocycle(const CocycleProvider& c, const std::vector<CirclePoint>& carrier,
                                  size_t max_witnesses)
{
    ValidationReport rep;
    size_t n = carrier.size();
    std::vector<int> val(n * n * n);
    auto at = [&](size_t i, size_t j, size_t k) -> int& { return val[(i * n + j) * n + k]; };
    size_t reduced = 0, negative = 0, delta = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                int v = c(carrier[i], carrier[j], carrier[k]);
                at(i, j, k) = v;
                if (v < 0 && negative++ < max_witnesses)
                    rep.violations.push_back({"negative value", {carrier[i], carrier[j], carrier[k]}});
                if ((i == j || j == k) && v != 0 && reduced++ < max_witnesses)
                    rep.violations.push_back({"not reduced", {carrier[i], carrier[j], carrier[k]}});
            }
    for (size_t w = 0; w < n; ++w)
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                for (size_t z = 0; z < n; ++z) {
                    int d = at(x, y, z) - at(w, y, z) + at(w, x, z) - at(w, x, y);
                    if (d != 0 && delta++ < max_witnesses)
                        rep.violations.push_back(
                            {"delta c != 0", {carrier[w], carrier[x], carrier[y], carrier[z]}});
                }
    return rep;
}

CocycleProvider cocycle_from_b(const std::vector<std::vector<int>>& b)
{
    std::map<std::array<long long, 3>, int> t;
    long long n = (long long)b.size();
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y)
            for (long long z = 0; z < n; ++z)
                t[{x, y, z}] = b[x][y] + b[y][z] - b[x][z];
    return CocycleProvider::table(std::move(t));
}

} // namespace cycloset
