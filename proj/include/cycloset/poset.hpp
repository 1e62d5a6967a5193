#pragma once

#include "cycloset/cocycle.hpp"
#include "cycloset/point.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cycloset {

enum class AutoKind { Identity, Canonical, Rotation };

struct Automorphism {
    AutoKind kind = AutoKind::Canonical;
    Rational step{0};

    static Automorphism identity() { return {AutoKind::Identity, 0}; }
    static Automorphism canonical() { return {AutoKind::Canonical, 0}; }
    static Automorphism rotation(Rational s) { return {AutoKind::Rotation, s}; }
};

enum class PosetKind { Zn, Angles, ZZinf, Table };

/// The cyclic poset (X, c)_phi.
///
/// Finite kinds keep their carrier sorted by key.  The Z(Z_inf) kind is
/// infinite: its points are Symbolic (w, n) and window() materializes the
/// points with |n| <= W.
class CyclicPoset {
public:
    static CyclicPoset zn(long long n, Automorphism a = Automorphism::canonical());
    static CyclicPoset angles(std::vector<Rational> turns, Automorphism a = Automorphism::canonical());
    static CyclicPoset zzinf(int limits, Automorphism a = Automorphism::canonical());
    static CyclicPoset zzinf_at(std::vector<Rational> limit_turns);
    static CyclicPoset table(std::vector<std::string> labels, CocycleProvider c,
                             Automorphism a = Automorphism::identity());

    PosetKind kind() const { return kind_; }
    const Automorphism& automorphism() const { return auto_; }
    const CocycleProvider& cocycle() const { return cocycle_; }
    bool finite() const { return kind_ != PosetKind::ZZinf; }

    // finite carrier, in cyclic order from the basepoint
    const std::vector<CirclePoint>& carrier() const { return carrier_; }
    const std::vector<std::string>& labels() const { return labels_; }
    size_t size() const { return carrier_.size(); }

    int limit_count() const { return (int)limit_turns_.size(); }
    const std::vector<Rational>& limit_turns() const { return limit_turns_; }
    CirclePoint limit_point(int w) const;
    CirclePoint point(int limit, long long pos) const;

    // Finite carrier, or every symbolic point with |pos| <= w.
    std::vector<CirclePoint> window(long long w) const;

    int c(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) const
    {
        return cocycle_(x, y, z);
    }

    CirclePoint successor(const CirclePoint& p) const;
    CirclePoint predecessor(const CirclePoint& p) const;
    CirclePoint phi(const CirclePoint& p) const;
    CirclePoint phi_inv(const CirclePoint& p) const;

    bool contains(const CirclePoint& p) const;
    size_t index_of(const CirclePoint& p) const;

    // Same poset with a different cocycle / automorphism.
    CyclicPoset with_cocycle(CocycleProvider c) const;
    CyclicPoset with_automorphism(Automorphism a) const;

    // Stable identifier used in hashes and session files.
    std::string id() const;

private:
    PosetKind kind_ = PosetKind::Zn;
    Automorphism auto_;
    CocycleProvider cocycle_ = CocycleProvider::winding();
    std::vector<CirclePoint> carrier_;
    std::vector<std::string> labels_;
    std::vector<Rational> limit_turns_;
    long long rotation_steps_ = 0;

    void setup_rotation();
};

// b(x,y) for the level-0 section: b(x,y) = c(x0,x,y), x0 = carrier[0].
std::vector<std::vector<int>> b_function(const CyclicPoset& p);

bool is_nondegenerate(const CyclicPoset& p);

struct CoveringPoset {
    std::vector<CirclePoint> points;
    std::vector<std::vector<int>> b;

    // (x,m) <= (y,n) iff n - m >= b(x,y)
    bool leq(size_t x, long long m, size_t y, long long n) const { return n - m >= b[x][y]; }
};

struct LiftedPoint {
    size_t x;
    long long level;
};

struct CoveringReport {
    bool fibers_ok = true;
    bool sigma_ok = true;
    bool antisymmetric = true;
    bool condition3 = true;
    std::vector<std::pair<LiftedPoint, LiftedPoint>> antisymmetry_witnesses;
    // witnesses (m, n) of x <= s^m y <= s^(m+n) x, indexed [x][y]
    std::vector<std::vector<std::pair<long long, long long>>> mn;
    bool ok() const { return fibers_ok && sigma_ok && antisymmetric && condition3; }
};

CoveringPoset build_covering(const CyclicPoset& p);
CoveringReport check_covering_axioms(const CoveringPoset& cov, long long radius = 2);

struct StarReport {
    bool ok = true;
    // threshold n for each (a, b) in the window, or nullopt
    std::vector<std::tuple<LiftedPoint, LiftedPoint, std::optional<long long>>> thresholds;
    std::optional<std::pair<LiftedPoint, LiftedPoint>> witness;
};

// Property (*): a < n.b and a not< (n-1).b for a unique n.
StarReport check_zposet_star(const CoveringPoset& cov, long long radius = 1);

// Whether the automorphism lifts with x <= phi x <= phi^2 x < sigma x.
bool is_admissible_automorphism(const CyclicPoset& p, std::string* reason = nullptr);

// Z(Z_inf) over a finite embedded Z (at least two points).
CyclicPoset star_product(const CyclicPoset& z);

struct AdmissibilityReport {
    bool admissible = false;
    std::string reason;
};

struct SubsetDescriptor {
    std::string kind;          // "zn", "angles", "z_zinfty", "harmonic"
    long long n = 0;           // zn size or limit count
    std::vector<Rational> turns;
};

AdmissibilityReport is_admissible(const SubsetDescriptor& d);

} // namespace cycloset
