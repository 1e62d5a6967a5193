#include "cycloset/clusters.hpp"
#include "cycloset/theta.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace cycloset {

Cluster::Cluster(std::vector<Arc> a) : arcs(std::move(a))
{
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

bool Cluster::contains(const Arc& a) const
{
    return std::binary_search(arcs.begin(), arcs.end(), a);
}

uint64_t fnv1a(const std::string& s, uint64_t h)
{
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

uint64_t Cluster::hash() const
{
    uint64_t h = fnv1a("");
    for (const auto& a : arcs)
        h = fnv1a(a.x.label() + "," + a.y.label() + ";", h);
    return h;
}

std::string Cluster::hash_hex() const
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)hash());
    return buf;
}

bool compatible(const FrobeniusEngine& e, const ClusterObject& a, const ClusterObject& b)
{
    if (a.same_pair(b))
        return true;
    if (a.status != ObjectStatus::Nonzero || b.status != ObjectStatus::Nonzero)
        return true;
    int s = e.ext1_dim(a, b) + e.ext1_dim(b, a);
    if (e.poset().automorphism().kind == AutoKind::Identity)
        return s <= 1;
    return s == 0;
}

bool compatible(const FrobeniusEngine& e, const Arc& a, const Arc& b)
{
    return compatible(e, e.object(a), e.object(b));
}

std::vector<Arc> nonzero_arcs(const FrobeniusEngine& e)
{
    const auto& pts = e.poset().carrier();
    std::vector<Arc> out;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (e.object(pts[i], pts[j]).status == ObjectStatus::Nonzero)
                out.emplace_back(pts[i], pts[j]);
    return out;
}

std::vector<Arc> frozen_arcs(const CyclicPoset& p)
{
    std::vector<Arc> out;
    if (p.automorphism().kind != AutoKind::Identity || !p.finite() || p.size() < 3)
        return out;
    const auto& pts = p.carrier();
    for (size_t i = 0; i < pts.size(); ++i)
        out.emplace_back(pts[i], pts[(i + 1) % pts.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_frozen(const CyclicPoset& p, const Arc& a)
{
    if (p.automorphism().kind != AutoKind::Identity || !p.finite())
        return false;
    return p.successor(a.x) == a.y || p.successor(a.y) == a.x;
}

namespace {

// Polygon whose triangulations carry the clusters containing `a`.
std::vector<CirclePoint> polygon_for(const CyclicPoset& p, const CirclePoint& a)
{
    if (p.automorphism().kind == AutoKind::Rotation) {
        auto o = orbit(p, a);
        std::sort(o.begin(), o.end());
        return o;
    }
    return p.carrier();
}

std::vector<Arc> polygon_sides(const std::vector<CirclePoint>& v)
{
    std::vector<Arc> out;
    for (size_t i = 0; i < v.size(); ++i)
        out.emplace_back(v[i], v[(i + 1) % v.size()]);
    return out;
}

} // namespace

ClusterCheck is_cluster(const FrobeniusEngine& e, const std::vector<Arc>& arcs)
{
    const auto& P = e.poset();
    if (!P.finite())
        throw CycloError("Unsupported", "is_cluster needs a finite carrier");
    ClusterCheck r;
    auto fail = [&](std::string d, std::vector<Arc> w) {
        r.ok = false;
        r.defect = std::move(d);
        r.witness = std::move(w);
        return r;
    };
    std::set<Arc> seen;
    for (const auto& a : arcs) {
        if (!P.contains(a.x) || !P.contains(a.y))
            return fail("endpoint outside the carrier", {a});
        if (!seen.insert(a).second)
            return fail("duplicate arc", {a});
        if (e.object(a).status != ObjectStatus::Nonzero)
            return fail("zero or nonexistent object", {a});
    }
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j)
            if (!compatible(e, arcs[i], arcs[j]))
                return fail("incompatible pair", {arcs[i], arcs[j]});

    std::vector<Arc> candidates = nonzero_arcs(e);
    if (P.automorphism().kind == AutoKind::Rotation) {
        if (arcs.empty())
            return fail("empty arc set", {});
        auto poly = polygon_for(P, arcs[0].x);
        std::set<CirclePoint> inside(poly.begin(), poly.end());
        for (const auto& a : arcs)
            if (!inside.count(a.x) || !inside.count(a.y))
                return fail("arcs leave the orbit", {arcs[0], a});
        std::erase_if(candidates, [&](const Arc& a) { return !inside.count(a.x) || !inside.count(a.y); });
    }
    for (const auto& cand : candidates) {
        if (seen.count(cand))
            continue;
        bool all = true;
        for (const auto& a : arcs)
            if (!compatible(e, cand, a)) {
                all = false;
                break;
            }
        if (all)
            return fail("not maximal", {cand});
    }
    return r;
}

std::vector<std::vector<std::pair<int, int>>> polygon_triangulations(int n)
{
    using Tri = std::vector<std::pair<int, int>>;
    std::map<std::pair<int, int>, std::vector<Tri>> memo;
    // triangulations of the sub-polygon i..j (edge (i,j) present)
    std::function<const std::vector<Tri>&(int, int)> go = [&](int i, int j) -> const std::vector<Tri>& {
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        std::vector<Tri> out;
        if (j - i < 2) {
            out.push_back({});
        } else {
            for (int k = i + 1; k < j; ++k) {
                const auto& left = go(i, k);
                const auto& right = go(k, j);
                for (const auto& l : left)
                    for (const auto& r : right) {
                        Tri t = l;
                        t.insert(t.end(), r.begin(), r.end());
                        if (k > i + 1)
                            t.emplace_back(i, k);
                        if (j > k + 1)
                            t.emplace_back(k, j);
                        out.push_back(std::move(t));
                    }
            }
        }
        return memo[key] = std::move(out);
    };
    if (n < 3)
        return {{}};
    return go(0, n - 1);
}

std::vector<Cluster> enumerate_clusters(const FrobeniusEngine& e)
{
    const auto& P = e.poset();
    if (!P.finite())
        throw CycloError("Unsupported", "enumeration needs a finite carrier");
    if (P.size() < 4)
        throw CycloError("TooSmall", "clusters need at least four points");
    if (P.automorphism().kind == AutoKind::Rotation)
        return enumerate_theta_clusters(e);

    std::vector<Cluster> out;
    if (P.kind() == PosetKind::Table) {
        auto cand = nonzero_arcs(e);
        for (auto& s : maximal_compatible_sets(e, {}, cand, 1u << 20).maximal)
            out.emplace_back(std::move(s));
    } else {
        const auto& pts = P.carrier();
        auto frozen = frozen_arcs(P);
        for (const auto& t : polygon_triangulations((int)pts.size())) {
            std::vector<Arc> arcs = frozen;
            for (auto [i, j] : t)
                arcs.emplace_back(pts[i], pts[j]);
            out.emplace_back(std::move(arcs));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Arc flip_partner(const std::vector<Arc>& edges, const Arc& arc, CirclePoint* a_out, CirclePoint* b_out)
{
    std::set<Arc> E(edges.begin(), edges.end());
    std::set<CirclePoint> V;
    for (const auto& e : edges) {
        V.insert(e.x);
        V.insert(e.y);
    }
    auto apex = [&](const CirclePoint& from, const CirclePoint& to) {
        for (const auto& v : V)
            if (strictly_between(from, v, to) && E.count(Arc(from, v)) && E.count(Arc(v, to)))
                return v;
        throw CycloError("FrozenArc", "arc " + arc.x.label() + "," + arc.y.label() +
                                          " does not bound a triangle on both sides");
    };
    CirclePoint a = apex(arc.x, arc.y);
    CirclePoint b = apex(arc.y, arc.x);
    if (a_out)
        *a_out = a;
    if (b_out)
        *b_out = b;
    return Arc(a, b);
}

std::vector<Arc> mutable_arcs(const CyclicPoset& p, const Cluster& c)
{
    std::vector<Arc> out;
    for (const auto& a : c.arcs)
        if (!is_frozen(p, a))
            out.push_back(a);
    return out;
}

MutationResult mutation_triangle(const FrobeniusEngine& e, const Cluster& c, const Arc& arc)
{
    const auto& P = e.poset();
    if (!c.contains(arc))
        throw CycloError("NotInCluster", "arc " + arc.x.label() + "," + arc.y.label() + " is not in the cluster");
    if (is_frozen(P, arc))
        throw CycloError("FrozenArc", "arc " + arc.x.label() + "," + arc.y.label() + " is frozen");
    auto poly = polygon_for(P, arc.x);
    std::vector<Arc> edges = polygon_sides(poly);
    std::set<CirclePoint> inside(poly.begin(), poly.end());
    for (const auto& a : c.arcs)
        if (inside.count(a.x) && inside.count(a.y))
            edges.push_back(a);
    CirclePoint a, b;
    Arc partner = flip_partner(edges, arc, &a, &b);

    MutationResult r;
    r.removed = arc;
    r.added = partner;
    r.middle_left = Arc(arc.x, b);
    r.middle_right = Arc(a, arc.y);
    std::vector<Arc> arcs;
    for (const auto& x : c.arcs)
        if (x != arc)
            arcs.push_back(x);
    arcs.push_back(partner);
    r.cluster = Cluster(std::move(arcs));
    return r;
}

Cluster mutate(const FrobeniusEngine& e, const Cluster& c, const Arc& arc)
{
    return mutation_triangle(e, c, arc).cluster;
}

ExchangeGraph exchange_graph(const FrobeniusEngine& e, const Cluster& seed, size_t budget)
{
    ExchangeGraph g;
    if (budget == 0)
        budget = 1;
    std::map<Cluster, size_t> index;
    std::deque<size_t> queue;
    index[seed] = 0;
    g.nodes.push_back(seed);
    queue.push_back(0);
    std::set<std::pair<size_t, size_t>> edges;
    while (!queue.empty()) {
        size_t u = queue.front();
        queue.pop_front();
        Cluster cur = g.nodes[u];
        for (const auto& arc : mutable_arcs(e.poset(), cur)) {
            Cluster next = mutate(e, cur, arc);
            auto it = index.find(next);
            size_t v;
            if (it == index.end()) {
                if (g.nodes.size() >= budget) {
                    g.truncated = true;
                    continue;
                }
                v = g.nodes.size();
                index[next] = v;
                g.nodes.push_back(next);
                queue.push_back(v);
            } else {
                v = it->second;
            }
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::string to_dot(const ExchangeGraph& g)
{
    std::ostringstream os;
    os << "graph exchange {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << g.nodes[i].hash_hex() << "\"];\n";
    for (auto [u, v] : g.edges)
        os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
    return os.str();
}

bool ClusterQuiver::has_loops() const
{
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i][i])
            return true;
    return false;
}

bool ClusterQuiver::has_two_cycles() const
{
    for (size_t i = 0; i < arrows.size(); ++i)
        for (size_t j = i + 1; j < arrows.size(); ++j)
            if (arrows[i][j] && arrows[j][i])
                return true;
    return false;
}

std::vector<std::vector<int>> ClusterQuiver::exchange_matrix() const
{
    size_t n = arrows.size();
    std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            b[i][j] = arrows[i][j] - arrows[j][i];
    return b;
}

ClusterQuiver cluster_quiver(const FrobeniusEngine& e, const Cluster& c)
{
    ClusterQuiver q;
    q.vertices = c.arcs;
    size_t n = c.arcs.size();
    q.arrows.assign(n, std::vector<int>(n, 0));
    std::vector<ClusterObject> objs;
    for (const auto& a : c.arcs) {
        objs.push_back(e.object(a));
        q.frozen.push_back(is_frozen(e.poset(), a));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            std::vector<ClusterObject> others;
            for (size_t k = 0; k < n; ++k)
                if (k != i && k != j)
                    others.push_back(objs[k]);
            q.arrows[i][j] = e.radical_quotient_dim(objs[i], objs[j], others);
        }
    return q;
}

std::vector<std::vector<int>> dwz_mutate(const std::vector<std::vector<int>>& b, size_t k)
{
    auto out = b;
    size_t n = b.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == k || j == k)
                out[i][j] = -b[i][j];
            else
                out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
        }
    return out;
}

bool quiver_mutation_check(const FrobeniusEngine& e, const Cluster& c, const Arc& arc)
{
    auto r = mutation_triangle(e, c, arc);
    auto q0 = cluster_quiver(e, c);
    auto q1 = cluster_quiver(e, r.cluster);
    size_t n = c.arcs.size();
    size_t k = std::find(c.arcs.begin(), c.arcs.end(), arc) - c.arcs.begin();
    std::vector<size_t> image(n);
    for (size_t i = 0; i < n; ++i) {
        Arc a = i == k ? r.added : c.arcs[i];
        image[i] = std::find(r.cluster.arcs.begin(), r.cluster.arcs.end(), a) - r.cluster.arcs.begin();
    }
    auto expect = dwz_mutate(q0.exchange_matrix(), k);
    auto got = q1.exchange_matrix();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (q0.frozen[i] && q0.frozen[j])
                continue;
            if (expect[i][j] != got[image[i]][image[j]])
                return false;
        }
    return true;
}

Arc spaced_out_embed(const Arc& a, long long n)
{
    return Arc(CirclePoint::orbit(2 * a.x.index, 2 * n), CirclePoint::orbit(2 * a.y.index, 2 * n));
}

JReport verify_J(int n, EngineOptions opts)
{
    JReport r;
    r.n = n;
    FrobeniusEngine e1(CyclicPoset::zn(n, Automorphism::identity()), opts);
    FrobeniusEngine e2(CyclicPoset::zn(2 * n, Automorphism::canonical()), opts);
    const auto& pts = e1.poset().carrier();
    std::vector<Arc> objs;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            objs.emplace_back(pts[i], pts[j]);
    for (const auto& a : objs)
        for (const auto& b : objs) {
            ++r.pairs_checked;
            int h1 = e1.stable_hom_dim(e1.object(a), e1.object(b));
            int h2 = e2.stable_hom_dim(e2.object(spaced_out_embed(a, n)), e2.object(spaced_out_embed(b, n)));
            if (h1 != h2)
                ++r.hom_failures;
        }
    for (const auto& c : enumerate_clusters(e1)) {
        ++r.clusters_checked;
        std::vector<Arc> image;
        for (const auto& a : c.arcs)
            image.push_back(spaced_out_embed(a, n));
        if (!is_cluster(e2, image).ok)
            ++r.cluster_failures;
    }
    std::set<Arc> image;
    for (const auto& a : objs)
        image.insert(spaced_out_embed(a, n));
    for (const auto& a : image)
        if (image.count(e2.shift(e2.object(a)).arc()))
            ++r.shift_intersection;
    return r;
}

CliqueSearch maximal_compatible_sets(const FrobeniusEngine& e, const std::vector<Arc>& seed,
                                     const std::vector<Arc>& candidates, size_t budget)
{
    std::set<Arc> in_seed(seed.begin(), seed.end());
    std::vector<Arc> cand;
    for (const auto& a : candidates) {
        if (in_seed.count(a))
            continue;
        auto o = e.object(a);
        if (o.status != ObjectStatus::Nonzero || e.ext1_dim(o, o) != 0)
            continue;
        bool ok = true;
        for (const auto& s : seed)
            if (!compatible(e, a, s)) {
                ok = false;
                break;
            }
        if (ok)
            cand.push_back(a);
    }
    size_t n = cand.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            adj[i][j] = adj[j][i] = compatible(e, cand[i], cand[j]);

    CliqueSearch out;
    size_t calls = 0;
    std::vector<size_t> R;
    // Bron-Kerbosch with pivoting
    std::function<void(std::vector<size_t>, std::vector<size_t>)> bk = [&](std::vector<size_t> Pv,
                                                                           std::vector<size_t> Xv) {
        if (++calls > budget) {
            out.truncated = true;
            return;
        }
        if (Pv.empty() && Xv.empty()) {
            std::vector<Arc> s = seed;
            for (auto i : R)
                s.push_back(cand[i]);
            std::sort(s.begin(), s.end());
            out.largest = std::max(out.largest, s.size());
            out.maximal.push_back(std::move(s));
            return;
        }
        size_t pivot = Pv.empty() ? Xv[0] : Pv[0];
        size_t best = 0;
        for (auto src : {&Pv, &Xv})
            for (auto u : *src) {
                size_t cnt = 0;
                for (auto v : Pv)
                    cnt += adj[u][v];
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        std::vector<size_t> todo;
        for (auto v : Pv)
            if (!adj[pivot][v])
                todo.push_back(v);
        for (auto v : todo) {
            std::vector<size_t> P2, X2;
            for (auto w : Pv)
                if (adj[v][w])
                    P2.push_back(w);
            for (auto w : Xv)
                if (adj[v][w])
                    X2.push_back(w);
            R.push_back(v);
            bk(P2, X2);
            R.pop_back();
            if (out.truncated)
                return;
            std::erase(Pv, v);
            Xv.push_back(v);
        }
    };
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i)
        all[i] = i;
    bk(all, {});
    std::sort(out.maximal.begin(), out.maximal.end());
    return out;
}

} // namespace cycloset
