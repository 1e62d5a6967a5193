#include "cycloset/poset.hpp"

#include <algorithm>
#include <limits>

namespace cycloset {

CyclicPoset CyclicPoset::zn(long long n, Automorphism a)
{
    if (n < 1)
        throw CycloError("InvalidPoset", "Z_n needs n >= 1");
    CyclicPoset p;
    p.kind_ = PosetKind::Zn;
    p.auto_ = a;
    for (long long i = 0; i < n; ++i)
        p.carrier_.push_back(CirclePoint::orbit(i, n));
    p.setup_rotation();
    return p;
}

CyclicPoset CyclicPoset::angles(std::vector<Rational> turns, Automorphism a)
{
    CyclicPoset p;
    p.kind_ = PosetKind::Angles;
    p.auto_ = a;
    for (auto t : turns)
        p.carrier_.push_back(CirclePoint::angle(t));
    std::sort(p.carrier_.begin(), p.carrier_.end());
    if (std::adjacent_find(p.carrier_.begin(), p.carrier_.end()) != p.carrier_.end())
        throw CycloError("InvalidPoset", "repeated angle in carrier");
    p.setup_rotation();
    return p;
}

CyclicPoset CyclicPoset::zzinf(int limits, Automorphism a)
{
    if (limits < 1)
        throw CycloError("InvalidPoset", "Z(Z_inf) needs at least one limit point");
    std::vector<Rational> t;
    for (int j = 0; j < limits; ++j)
        t.push_back(Rational(j, limits));
    CyclicPoset p = zzinf_at(t);
    if (a.kind == AutoKind::Rotation)
        throw CycloError("Unsupported", "rotations are not supported on Z(Z_inf)");
    p.auto_ = a;
    return p;
}

CyclicPoset CyclicPoset::zzinf_at(std::vector<Rational> limit_turns)
{
    CyclicPoset p;
    p.kind_ = PosetKind::ZZinf;
    p.auto_ = Automorphism::canonical();
    for (auto& t : limit_turns)
        t = wrap_turns(t);
    std::sort(limit_turns.begin(), limit_turns.end());
    if (limit_turns.empty() ||
        std::adjacent_find(limit_turns.begin(), limit_turns.end()) != limit_turns.end())
        throw CycloError("InvalidPoset", "limit points must be distinct");
    p.limit_turns_ = std::move(limit_turns);
    return p;
}

CyclicPoset CyclicPoset::table(std::vector<std::string> labels, CocycleProvider c, Automorphism a)
{
    CyclicPoset p;
    p.kind_ = PosetKind::Table;
    p.auto_ = a;
    p.cocycle_ = std::move(c);
    long long n = (long long)labels.size();
    for (long long i = 0; i < n; ++i)
        p.carrier_.push_back(CirclePoint::orbit(i, n));
    p.labels_ = std::move(labels);
    if (a.kind == AutoKind::Rotation)
        throw CycloError("Unsupported", "rotations need an embedded carrier");
    return p;
}

void CyclicPoset::setup_rotation()
{
    if (auto_.kind != AutoKind::Rotation)
        return;
    Rational s = wrap_turns(auto_.step);
    if (kind_ == PosetKind::Zn) {
        Rational k = s * Rational((long long)carrier_.size());
        if (k.denominator() != 1)
            throw CycloError("NotInvariant", "Z_n is not invariant under rotation by " + to_string(s));
        rotation_steps_ = k.numerator();
    } else {
        for (const auto& pt : carrier_)
            if (!std::binary_search(carrier_.begin(), carrier_.end(), CirclePoint::angle(pt.turns + s)))
                throw CycloError("NotInvariant", "carrier is not invariant under rotation by " + to_string(s));
    }
}

CirclePoint CyclicPoset::limit_point(int w) const
{
    return CirclePoint::angle(limit_turns_.at(w));
}

CirclePoint CyclicPoset::point(int limit, long long pos) const
{
    int l = limit_count();
    int w = ((limit % l) + l) % l;
    return CirclePoint::symbolic(w, pos, limit_turns_[w]);
}

std::vector<CirclePoint> CyclicPoset::window(long long w) const
{
    if (finite())
        return carrier_;
    std::vector<CirclePoint> out;
    for (int j = 0; j < limit_count(); ++j)
        for (long long n = -w; n <= w; ++n)
            out.push_back(point(j, n));
    return out;
}

bool CyclicPoset::contains(const CirclePoint& p) const
{
    if (!finite())
        return p.kind == CirclePoint::Kind::Symbolic && p.limit >= 0 && p.limit < limit_count() &&
               p.turns == limit_turns_[p.limit];
    return std::binary_search(carrier_.begin(), carrier_.end(), p);
}

size_t CyclicPoset::index_of(const CirclePoint& p) const
{
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), p);
    if (it == carrier_.end() || *it != p)
        throw CycloError("UnknownPoint", "point " + p.label() + " is not in the carrier");
    return (size_t)(it - carrier_.begin());
}

CirclePoint CyclicPoset::successor(const CirclePoint& p) const
{
    if (!finite())
        return point(p.limit, p.index + 1);
    size_t i = index_of(p);
    return carrier_[(i + 1) % carrier_.size()];
}

CirclePoint CyclicPoset::predecessor(const CirclePoint& p) const
{
    if (!finite())
        return point(p.limit, p.index - 1);
    size_t i = index_of(p);
    return carrier_[(i + carrier_.size() - 1) % carrier_.size()];
}

CirclePoint CyclicPoset::phi(const CirclePoint& p) const
{
    switch (auto_.kind) {
    case AutoKind::Identity:
        return p;
    case AutoKind::Canonical:
        return successor(p);
    case AutoKind::Rotation:
        if (kind_ == PosetKind::Zn)
            return CirclePoint::orbit(p.index + rotation_steps_, (long long)carrier_.size());
        return CirclePoint::angle(p.turns + auto_.step);
    }
    return p;
}

CirclePoint CyclicPoset::phi_inv(const CirclePoint& p) const
{
    switch (auto_.kind) {
    case AutoKind::Identity:
        return p;
    case AutoKind::Canonical:
        return predecessor(p);
    case AutoKind::Rotation:
        if (kind_ == PosetKind::Zn)
            return CirclePoint::orbit(p.index - rotation_steps_, (long long)carrier_.size());
        return CirclePoint::angle(p.turns - auto_.step);
    }
    return p;
}

CyclicPoset CyclicPoset::with_cocycle(CocycleProvider c) const
{
    CyclicPoset p = *this;
    p.cocycle_ = std::move(c);
    return p;
}

CyclicPoset CyclicPoset::with_automorphism(Automorphism a) const
{
    CyclicPoset p = *this;
    p.auto_ = a;
    p.setup_rotation();
    return p;
}

std::string CyclicPoset::id() const
{
    std::string a;
    switch (auto_.kind) {
    case AutoKind::Identity:
        a = "id";
        break;
    case AutoKind::Canonical:
        a = "canonical";
        break;
    case AutoKind::Rotation:
        a = "rot=" + to_string(auto_.step);
        break;
    }
    std::string s;
    switch (kind_) {
    case PosetKind::Zn:
        s = "zn:" + std::to_string(carrier_.size());
        break;
    case PosetKind::Angles:
        s = "angles:";
        for (size_t i = 0; i < carrier_.size(); ++i)
            s += (i ? "," : "") + to_string(carrier_[i].turns);
        break;
    case PosetKind::ZZinf:
        s = "zz:";
        for (size_t i = 0; i < limit_turns_.size(); ++i)
            s += (i ? "," : "") + to_string(limit_turns_[i]);
        break;
    case PosetKind::Table:
        s = "table:" + std::to_string(carrier_.size());
        for (const auto& [k, v] : cocycle_.table_values())
            if (v)
                s += ";" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) +
                     "=" + std::to_string(v);
        break;
    }
    if (cocycle_.kind() == CocycleProvider::Kind::Cactus) {
        s += ":rho=";
        for (int c : cocycle_.rho().cls)
            s += std::to_string(c) + ".";
    }
    return s + ":" + a;
}

std::vector<std::vector<int>> b_function(const CyclicPoset& p)
{
    const auto& pts = p.carrier();
    size_t n = pts.size();
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    if (n == 0)
        return b;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            b[x][y] = p.c(pts[0], pts[x], pts[y]);
    return b;
}

bool is_nondegenerate(const CyclicPoset& p)
{
    const auto& pts = p.carrier();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j)
            if (i != j && p.c(pts[i], pts[j], pts[i]) < 1)
                return false;
    return true;
}

CoveringPoset build_covering(const CyclicPoset& p)
{
    if (!p.finite())
        throw CycloError("Unsupported", "covering needs a finite carrier");
    return {p.carrier(), b_function(p)};
}

CoveringReport check_covering_axioms(const CoveringPoset& cov, long long radius)
{
    CoveringReport rep;
    size_t n = cov.points.size();
    rep.mn.assign(n, std::vector<std::pair<long long, long long>>(n, {0, 0}));
    for (size_t x = 0; x < n; ++x)
        for (long long m = -radius; m <= radius; ++m)
            for (long long k = -radius; k <= radius; ++k)
                if (cov.leq(x, m, x, k) != (k >= m))
                    rep.fibers_ok = false;
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (long long m = -radius; m <= radius; ++m)
                for (long long k = -radius; k <= radius; ++k) {
                    if (cov.leq(x, m, y, k) != cov.leq(x, m + 1, y, k + 1))
                        rep.sigma_ok = false;
                    if (x != y && cov.leq(x, m, y, k) && cov.leq(y, k, x, m)) {
                        rep.antisymmetric = false;
                        if (rep.antisymmetry_witnesses.size() < 16)
                            rep.antisymmetry_witnesses.push_back({{x, m}, {y, k}});
                    }
                }
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
            long long m = std::max(0, cov.b[x][y]);
            long long k = std::max(0, cov.b[y][x]);
            if (!cov.leq(x, 0, y, m) || !cov.leq(y, m, x, m + k))
                rep.condition3 = false;
            rep.mn[x][y] = {m, k};
        }
    return rep;
}

StarReport check_zposet_star(const CoveringPoset& cov, long long radius)
{
    StarReport rep;
    size_t n = cov.points.size();
    long long bmax = 0;
    for (const auto& row : cov.b)
        for (int v : row)
            if (v != std::numeric_limits<int>::min())
                bmax = std::max<long long>(bmax, std::abs(v));
    long long span = 2 * radius + bmax + 3;
    auto leq = [&](size_t x, long long m, size_t y, long long k) {
        int b = cov.b[x][y];
        return b == std::numeric_limits<int>::min() || k - m >= b;
    };
    auto less = [&](size_t x, long long m, size_t y, long long k) {
        return leq(x, m, y, k) && !leq(y, k, x, m);
    };
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            for (long long m = -radius; m <= radius; ++m)
                for (long long k = -radius; k <= radius; ++k) {
                    std::optional<long long> th;
                    for (long long t = -span; t <= span; ++t)
                        if (less(x, m, y, k + t)) {
                            if (t > -span && !less(x, m, y, k + t - 1))
                                th = t;
                            break;
                        }
                    if (!th && rep.ok) {
                        rep.ok = false;
                        rep.witness = {{x, m}, {y, k}};
                    }
                    rep.thresholds.push_back({{x, m}, {y, k}, th});
                }
    return rep;
}

bool is_admissible_automorphism(const CyclicPoset& p, std::string* reason)
{
    auto fail = [&](const std::string& r) {
        if (reason)
            *reason = r;
        return false;
    };
    if (p.automorphism().kind == AutoKind::Rotation) {
        Rational s = wrap_turns(p.automorphism().step);
        if (s == 0 || s >= Rational(1, 2))
            return fail("rotation must satisfy 0 < theta < 1/2 turn");
    }
    if (!p.finite())
        return true;
    auto b = b_function(p);
    const auto& pts = p.carrier();
    for (size_t x = 0; x < pts.size(); ++x) {
        size_t y = p.index_of(p.phi(pts[x]));
        size_t z = p.index_of(p.phi(pts[y]));
        int s2 = b[x][y] + b[y][z];
        if (s2 + b[z][x] > 1)
            return fail("phi^2 passes sigma at " + pts[x].label());
        if (z == x && s2 == 1)
            return fail("phi^2 equals sigma at " + pts[x].label());
    }
    return true;
}

CyclicPoset star_product(const CyclicPoset& z)
{
    if (!z.finite() || z.size() < 2)
        throw CycloError("InvalidPoset", "star product needs a finite carrier with at least two points");
    std::vector<Rational> t;
    for (const auto& p : z.carrier())
        t.push_back(p.turns);
    return CyclicPoset::zzinf_at(t);
}

AdmissibilityReport is_admissible(const SubsetDescriptor& d)
{
    if (d.kind == "zn") {
        if (d.n >= 4)
            return {true, "finite set with at least four points"};
        return {false, "fewer than four elements"};
    }
    if (d.kind == "angles") {
        std::vector<Rational> t;
        for (auto q : d.turns)
            t.push_back(wrap_turns(q));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        if (t.size() >= 4)
            return {true, "finite set with at least four points"};
        return {false, "fewer than four elements"};
    }
    if (d.kind == "z_zinfty") {
        if (d.n >= 1)
            return {true, "every limit point is a two-sided limit"};
        return {false, "no limit points"};
    }
    if (d.kind == "harmonic")
        return {false, "one-sided limit at 0"};
    throw CycloError("InvalidDescriptor", "unknown subset kind '" + d.kind + "'");
}

} // namespace cycloset
