#include "cycloset/frobenius.hpp"

#include <algorithm>
#include <mutex>

namespace cycloset {

std::string to_string(ObjectStatus s)
{
    switch (s) {
    case ObjectStatus::Zero:
        return "zero";
    case ObjectStatus::Nonzero:
        return "nonzero";
    case ObjectStatus::Nonexistent:
        return "nonexistent";
    }
    return {};
}

FrobeniusEngine::FrobeniusEngine(CyclicPoset p, EngineOptions o)
    : poset_(std::move(p)), opts_(o), field_{o.prime}
{
}

ClusterObject FrobeniusEngine::object(const CirclePoint& x0, const CirclePoint& y0) const
{
    ClusterObject e;
    e.x = x0 < y0 ? x0 : y0;
    e.y = x0 < y0 ? y0 : x0;
    const auto& P = poset_;
    if (e.x == e.y) {
        e.p = 0;
        e.q = 1;
        e.status = ObjectStatus::Zero;
        return e;
    }
    int w = P.c(e.x, e.y, e.x);
    if (w == 0)
        throw CycloError("DegenerateObject", "c(x,y,x) = 0 for x=" + e.x.label() + ", y=" + e.y.label());
    if (w >= 2) {
        e.status = ObjectStatus::Nonexistent;
        return e;
    }
    if (P.automorphism().kind != AutoKind::Identity) {
        if (P.c(e.x, P.phi(e.x), e.y) > e.p || P.c(e.y, P.phi(e.y), e.x) > e.q) {
            e.status = ObjectStatus::Nonexistent;
            return e;
        }
        if (e.y == P.phi(e.x) || e.y == P.phi_inv(e.x)) {
            e.status = ObjectStatus::Zero;
            return e;
        }
    }
    e.status = ObjectStatus::Nonzero;
    return e;
}

ClusterObject FrobeniusEngine::shift(const ClusterObject& a) const
{
    return object(poset_.phi_inv(a.y), poset_.phi_inv(a.x));
}

std::array<std::optional<Generator>, 2> FrobeniusEngine::hom_generators(const ClusterObject& A,
                                                                        const ClusterObject& B) const
{
    const auto& P = poset_;
    const auto &x = A.x, &y = A.y, &u = B.x, &v = B.y;
    std::array<std::optional<Generator>, 2> out;

    // a: x->u, e: y->v with  e t^m1 = a t^m2  and  a t^m3 = e t^m4
    int m1 = A.p + P.c(x, y, v), m2 = B.p + P.c(x, u, v);
    int m3 = A.q + P.c(y, x, u), m4 = B.q + P.c(y, v, u);
    if (m1 - m2 == m4 - m3) {
        int mu = std::min(m1, m2);
        Generator g;
        g.exp[0][0] = m1 - mu;
        g.exp[1][1] = m2 - mu;
        out[0] = g;
    }
    // b: y->u, g: x->v with  b t^n1 = g t^n2  and  g t^n3 = b t^n4
    int n1 = A.p + P.c(x, y, u), n2 = B.q + P.c(x, v, u);
    int n3 = A.q + P.c(y, x, v), n4 = B.p + P.c(y, u, v);
    if (n1 - n2 == n4 - n3) {
        int mu = std::min(n1, n2);
        Generator g;
        g.exp[1][0] = n2 - mu;
        g.exp[0][1] = n1 - mu;
        out[1] = g;
    }
    return out;
}

MorphismSpace FrobeniusEngine::hom_space(const ClusterObject& a, const ClusterObject& b) const
{
    MorphismSpace m;
    m.source = a;
    m.target = b;
    for (auto& g : hom_generators(a, b))
        if (g)
            m.basis.push_back(*g);
    m.stable_dim = stable_hom_dim(a, b);
    return m;
}

int FrobeniusEngine::hom_space_truncated_dim(const ClusterObject& A, const ClusterObject& B, int K) const
{
    const auto& P = poset_;
    const auto &x = A.x, &y = A.y, &u = B.x, &v = B.y;
    // unknown blocks: 0 = a (x->u), 1 = b (y->u), 2 = g (x->v), 3 = e (y->v)
    struct Term {
        int var, shift, sign;
    };
    std::vector<std::pair<Term, Term>> eqs = {
        {{1, A.p + P.c(x, y, u), 1}, {2, B.q + P.c(x, v, u), -1}},
        {{3, A.p + P.c(x, y, v), 1}, {0, B.p + P.c(x, u, v), -1}},
        {{0, A.q + P.c(y, x, u), 1}, {3, B.q + P.c(y, v, u), -1}},
        {{2, A.q + P.c(y, x, v), 1}, {1, B.p + P.c(y, u, v), -1}},
    };
    std::vector<std::vector<uint32_t>> rows;
    for (auto& [t1, t2] : eqs)
        for (int d = 0; d < K; ++d) {
            std::vector<uint32_t> row(4 * K, 0);
            for (auto t : {t1, t2}) {
                int i = d - t.shift;
                if (i >= 0)
                    row[t.var * K + i] = field_.add(row[t.var * K + i], field_.reduce(t.sign));
            }
            rows.push_back(std::move(row));
        }
    return 4 * K - rank_mod_p(std::move(rows), field_);
}

std::vector<ClusterObject> FrobeniusEngine::projectives_for(const ClusterObject& A, const ClusterObject& B) const
{
    const auto& P = poset_;
    std::vector<CirclePoint> base;
    if (opts_.all_projectives && P.finite()) {
        base = P.carrier();
    } else {
        for (const auto& z : {A.x, A.y, B.x, B.y}) {
            base.push_back(z);
            base.push_back(P.phi_inv(z));
        }
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());
    }
    std::vector<ClusterObject> out;
    for (const auto& a : base) {
        ClusterObject e;
        auto pa = P.phi(a);
        e.x = a;
        e.y = pa;
        if (a == pa) {
            e.p = 0;
            e.q = 1;
        } else {
            int w = P.c(a, pa, a);
            e.p = 0;
            e.q = 1 - w;
        }
        e.status = ObjectStatus::Zero;
        out.push_back(e);
    }
    return out;
}

namespace {

using Matrix = std::array<std::array<std::optional<TruncatedSeries>, 2>, 2>;

Matrix to_matrix(const Generator& g, int K, PrimeField f)
{
    Matrix m;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            if (g.exp[s][t] >= 0)
                m[s][t] = TruncatedSeries::monomial(g.exp[s][t], 1, K, f);
    return m;
}

} // namespace

int FrobeniusEngine::quotient_dim(const ClusterObject& A, const ClusterObject& B, int K,
                                  const std::vector<ClusterObject>* through, bool mod_t) const
{
    auto H = hom_generators(A, B);
    std::vector<int> live;
    for (int i = 0; i < 2; ++i)
        if (H[i])
            live.push_back(i);
    if (live.empty())
        return 0;

    // entry of each generator with exponent 0; the coefficient of a morphism
    // along that generator is read off there
    std::vector<std::pair<int, int>> pivot;
    for (int i : live) {
        const auto& g = *H[i];
        std::pair<int, int> pv{-1, -1};
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                if (g.exp[s][t] == 0 && pv.first < 0)
                    pv = {s, t};
        pivot.push_back(pv);
    }

    const auto& P = poset_;
    std::vector<std::vector<uint32_t>> rows;
    auto add_vector = [&](const std::vector<TruncatedSeries>& lam) {
        for (int j = 0; j < K; ++j) {
            std::vector<uint32_t> row;
            row.reserve(live.size() * K);
            for (const auto& s : lam) {
                auto sh = s.shifted(j);
                row.insert(row.end(), sh.coefficients().begin(), sh.coefficients().end());
            }
            rows.push_back(std::move(row));
        }
    };
    auto add_through = [&](const ClusterObject& M) {
        const CirclePoint src[2] = {A.x, A.y}, mid[2] = {M.x, M.y}, dst[2] = {B.x, B.y};
        for (auto& g1 : hom_generators(A, M)) {
            if (!g1)
                continue;
            Matrix f = to_matrix(*g1, K, field_);
            for (auto& g2 : hom_generators(M, B)) {
                if (!g2)
                    continue;
                Matrix h = to_matrix(*g2, K, field_);
                std::vector<TruncatedSeries> lam;
                for (auto [s, t] : pivot) {
                    TruncatedSeries acc(K, field_);
                    for (int j = 0; j < 2; ++j)
                        if (f[s][j] && h[j][t])
                            acc = acc + ((*f[s][j]) * (*h[j][t])).shifted(P.c(src[s], mid[j], dst[t]));
                    lam.push_back(acc);
                }
                add_vector(lam);
            }
        }
    };

    for (const auto& proj : projectives_for(A, B))
        add_through(proj);
    if (through)
        for (const auto& M : *through)
            add_through(M);
    if (mod_t)
        for (size_t i = 0; i < live.size(); ++i) {
            std::vector<TruncatedSeries> lam(live.size(), TruncatedSeries(K, field_));
            lam[i] = TruncatedSeries::monomial(1, 1, K, field_);
            add_vector(lam);
        }
    return (int)live.size() * K - rank_mod_p(std::move(rows), field_);
}

int FrobeniusEngine::stable_hom_dim(const ClusterObject& A, const ClusterObject& B) const
{
    if (A.status == ObjectStatus::Nonexistent || B.status == ObjectStatus::Nonexistent)
        throw CycloError("NonexistentObject", "object does not exist in this category");
    if (A.status == ObjectStatus::Zero || B.status == ObjectStatus::Zero)
        return 0;
    std::string key = A.x.label() + "|" + A.y.label() + "|" + B.x.label() + "|" + B.y.label();
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
    }
    int K = opts_.truncation;
    int d1 = quotient_dim(A, B, K, nullptr, false);
    int d2 = quotient_dim(A, B, K + 2, nullptr, false);
    if (d1 != d2)
        throw CycloError("StabilizationFailure", "stable Hom dimension differs at K=" + std::to_string(K) +
                                                     " and K=" + std::to_string(K + 2));
    std::unique_lock lock(memo_mutex_);
    memo_[key] = d1;
    return d1;
}

int FrobeniusEngine::ext1_dim(const ClusterObject& A, const ClusterObject& B) const
{
    return stable_hom_dim(A, shift(B));
}

int FrobeniusEngine::radical_quotient_dim(const ClusterObject& A, const ClusterObject& B,
                                          const std::vector<ClusterObject>& through) const
{
    if (A.status != ObjectStatus::Nonzero || B.status != ObjectStatus::Nonzero)
        return 0;
    int K = opts_.truncation;
    int d1 = quotient_dim(A, B, K, &through, true);
    int d2 = quotient_dim(A, B, K + 2, &through, true);
    if (d1 != d2)
        throw CycloError("StabilizationFailure", "radical quotient does not stabilize");
    return d1;
}

} // namespace cycloset
