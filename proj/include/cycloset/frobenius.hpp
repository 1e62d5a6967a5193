#pragma once

#include "cycloset/geometry.hpp"
#include "cycloset/poset.hpp"
#include "cycloset/series.hpp"

#include <array>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace cycloset {

enum class ObjectStatus { Zero, Nonzero, Nonexistent };

std::string to_string(ObjectStatus s);

/// E(x,y) = (P_x + P_y, [[0, beta], [alpha, 0]]) with alpha = t^p f_xy and
/// beta = t^q f_yx, so that p + q + c(x,y,x) = 1.
struct ClusterObject {
    CirclePoint x, y;
    int p = 0, q = 0;
    ObjectStatus status = ObjectStatus::Nonzero;

    Arc arc() const { return Arc(x, y); }
    bool same_pair(const ClusterObject& o) const { return arc() == o.arc(); }
};

// A monomial generator of Hom(E(x,y), E(u,v)) as an R-module.
// exp[s][t] is the t-exponent of the entry P_s -> P_t (s in {x,y},
// t in {u,v}); -1 marks a zero entry.
struct Generator {
    int exp[2][2] = {{-1, -1}, {-1, -1}};
};

struct MorphismSpace {
    ClusterObject source, target;
    std::vector<Generator> basis;
    int stable_dim = 0;
};

struct EngineOptions {
    uint32_t prime = 2;
    int truncation = 6;
    // quotient by every projective-injective of a finite carrier instead of
    // the ones attached to the four endpoints
    bool all_projectives = false;
};

class FrobeniusEngine {
public:
    explicit FrobeniusEngine(CyclicPoset p, EngineOptions o = {});

    const CyclicPoset& poset() const { return poset_; }
    const EngineOptions& options() const { return opts_; }

    ClusterObject object(const CirclePoint& x, const CirclePoint& y) const;
    ClusterObject object(const Arc& a) const { return object(a.x, a.y); }
    ClusterObject shift(const ClusterObject& a) const;

    std::array<std::optional<Generator>, 2> hom_generators(const ClusterObject& a, const ClusterObject& b) const;
    MorphismSpace hom_space(const ClusterObject& a, const ClusterObject& b) const;

    // k-dimension of the solution space of f d = d' f with entries in
    // k[t]/t^K (4K unknowns).
    int hom_space_truncated_dim(const ClusterObject& a, const ClusterObject& b, int K) const;

    int stable_hom_dim(const ClusterObject& a, const ClusterObject& b) const;
    int ext1_dim(const ClusterObject& a, const ClusterObject& b) const;

    // dim of stable Hom(a,b) modulo maps through `through` and t * Hom(a,b)
    int radical_quotient_dim(const ClusterObject& a, const ClusterObject& b,
                             const std::vector<ClusterObject>& through) const;

    std::vector<ClusterObject> projectives_for(const ClusterObject& a, const ClusterObject& b) const;

private:
    CyclicPoset poset_;
    EngineOptions opts_;
    PrimeField field_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::unordered_map<std::string, int> memo_;

    int quotient_dim(const ClusterObject& a, const ClusterObject& b, int K,
                     const std::vector<ClusterObject>* through, bool mod_t) const;
};

} // namespace cycloset
