#include "cycloset/symbolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cycloset {

CirclePoint Tail::at(const CyclicPoset& p, long long i) const
{
    if (dir == '+')
        return p.point(limit, start - i);
    return p.point(limit - 1, start + i);
}

Tail Tail::advanced(long long k) const
{
    Tail t = *this;
    t.start = dir == '+' ? start - k : start + k;
    return t;
}

int Tail::interval(int limits) const
{
    return dir == '+' ? limit : ((limit - 1) % limits + limits) % limits;
}

CirclePoint FanFamily::first_at(const CyclicPoset& p, long long i) const
{
    return fixed ? *fixed : first.at(p, i + offset);
}

Arc FanFamily::arc(const CyclicPoset& p, long long i) const
{
    return Arc(first_at(p, i), moving.at(p, i));
}

std::optional<long long> FanFamily::index_of(const CyclicPoset& p, const Arc& a) const
{
    int iv = moving.interval(p.limit_count());
    for (int side = 0; side < 2; ++side) {
        const auto& m = side ? a.y : a.x;
        const auto& other = side ? a.x : a.y;
        if (m.kind != CirclePoint::Kind::Symbolic || m.limit != iv)
            continue;
        long long i = moving.dir == '+' ? moving.start - m.pos() : m.pos() - moving.start;
        if (i >= 0 && first_at(p, i) == other)
            return i;
    }
    return std::nullopt;
}

FanFamily FanFamily::advanced(long long k) const
{
    FanFamily f = *this;
    if (!fixed)
        f.first = first.advanced(k);
    f.moving = moving.advanced(k);
    return f;
}

namespace {

auto family_key(const FanFamily& f)
{
    CirclePoint fx = f.fixed.value_or(CirclePoint{});
    return std::make_tuple(f.fixed.has_value(), fx.key(), f.first.key(), f.moving.key(), f.offset);
}

long long bound_for(const FanFamily& f, long long w)
{
    long long b = w + std::abs(f.moving.start) + std::abs(f.first.start) + std::abs(f.offset) + 2;
    return 2 * b;
}

bool in_window(const CirclePoint& p, long long w)
{
    return std::abs(p.pos()) <= w;
}

} // namespace

bool FanFamily::operator==(const FanFamily& o) const
{
    return family_key(*this) == family_key(o);
}

bool FanFamily::operator<(const FanFamily& o) const
{
    return family_key(*this) < family_key(o);
}

std::vector<Arc> SymbolicCluster::materialize(long long w) const
{
    std::vector<Arc> out = arcs;
    for (const auto& f : families)
        for (long long i = 0; i <= bound_for(f, w); ++i) {
            Arc a = f.arc(poset, i);
            if (in_window(a.x, w) && in_window(a.y, w))
                out.push_back(a);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool SymbolicCluster::operator==(const SymbolicCluster& o) const
{
    if (poset.id() != o.poset.id())
        return false;
    long long w = std::max(natural_window(), o.natural_window()) + 2;
    if (materialize(w) != o.materialize(w))
        return false;
    // each family moved to its first element with both endpoints outside the window
    auto tails = [&](const SymbolicCluster& s) {
        std::vector<FanFamily> out;
        for (const auto& f : s.families) {
            long long i = 0;
            while (true) {
                Arc a = f.arc(s.poset, i);
                if (std::abs(a.x.pos()) > w && std::abs(a.y.pos()) > w)
                    break;
                ++i;
            }
            FanFamily g = f.advanced(i);
            if (!g.fixed)
                g.first = g.first.advanced(g.offset);
            g.offset = 0;
            out.push_back(g);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return tails(*this) == tails(o);
}

long long SymbolicCluster::natural_window() const
{
    long long w = 0;
    for (const auto& a : arcs)
        w = std::max({w, std::abs(a.x.pos()), std::abs(a.y.pos())});
    for (const auto& f : families) {
        w = std::max({w, std::abs(f.moving.start), std::abs(f.first.start + f.offset),
                      std::abs(f.first.start)});
        if (f.fixed)
            w = std::max(w, std::abs(f.fixed->pos()));
    }
    return w;
}

SymbolicCluster canonicalize(SymbolicCluster s)
{
    for (auto& f : s.families) {
        if (!f.fixed)
            f.first = f.first.advanced(f.offset);
        f.offset = 0;
    }
    std::sort(s.arcs.begin(), s.arcs.end());
    s.arcs.erase(std::unique(s.arcs.begin(), s.arcs.end()), s.arcs.end());
    for (bool changed = true; changed;) {
        changed = false;
        for (auto& f : s.families) {
            Arc prev = f.arc(s.poset, -1);
            auto it = std::lower_bound(s.arcs.begin(), s.arcs.end(), prev);
            if (it == s.arcs.end() || *it != prev)
                continue;
            auto claims = std::count_if(s.families.begin(), s.families.end(),
                                        [&](const FanFamily& g) { return g.arc(s.poset, -1) == prev; });
            if (claims != 1)
                continue;
            s.arcs.erase(it);
            f = f.advanced(-1);
            changed = true;
        }
    }
    std::erase_if(s.arcs, [&](const Arc& a) {
        return std::any_of(s.families.begin(), s.families.end(),
                           [&](const FanFamily& f) { return f.index_of(s.poset, a).has_value(); });
    });
    std::sort(s.families.begin(), s.families.end());
    s.families.erase(std::unique(s.families.begin(), s.families.end()), s.families.end());
    return s;
}

LocalFiniteness is_locally_finite(const SymbolicCluster& s)
{
    for (const auto& f : s.families)
        if (f.fixed)
            return {false, f.fixed};
    return {};
}

std::set<std::pair<int, int>> limit_pairs(const SymbolicCluster& s)
{
    std::set<std::pair<int, int>> out;
    for (const auto& f : s.families)
        if (!f.fixed)
            out.insert({f.first.limit, f.moving.limit});
    return out;
}

bool is_triangulation_cluster(const SymbolicCluster& s, std::string* reason)
{
    auto lf = is_locally_finite(s);
    if (!lf.ok)
        throw CycloError("NotLocallyFinite", "point " + lf.witness->label() + " meets infinitely many arcs");
    auto say = [&](std::string r) {
        if (reason)
            *reason = std::move(r);
        return false;
    };
    for (const auto& f : s.families)
        if (f.first.limit != f.moving.limit)
            return say("a family pairs limit points " + std::to_string(f.first.limit) + " and " +
                       std::to_string(f.moving.limit));
    if (s.poset.finite())
        return true;
    for (int w = 0; w < s.poset.limit_count(); ++w) {
        bool two_sided = std::any_of(s.families.begin(), s.families.end(), [&](const FanFamily& f) {
            return f.first.limit == w && f.moving.limit == w && f.first.dir != f.moving.dir;
        });
        if (!two_sided)
            return say("no two-sided fan at limit point " + std::to_string(w));
    }
    return true;
}

NoncrossingPartition rho_from_cluster(const SymbolicCluster& s)
{
    auto lf = is_locally_finite(s);
    if (!lf.ok)
        throw CycloError("NotLocallyFinite", "point " + lf.witness->label() + " meets infinitely many arcs");
    int L = s.poset.finite() ? 0 : s.poset.limit_count();
    std::vector<CirclePoint> pts;
    for (int j = 0; j < L; ++j)
        pts.push_back(s.poset.limit_point(j));
    std::vector<int> parent(L);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [a, b] : limit_pairs(s))
        parent[find(a)] = find(b);
    std::map<int, std::vector<int>> groups;
    for (int j = 0; j < L; ++j)
        groups[find(j)].push_back(j);
    std::vector<std::vector<int>> classes;
    for (auto& [_, g] : groups)
        classes.push_back(g);
    std::sort(classes.begin(), classes.end());
    return NoncrossingPartition::from_classes(pts, classes);
}

SymbolicCluster build_zigzag_cluster(const std::vector<std::pair<long long, long long>>& corners)
{
    if (corners.empty())
        throw CycloError("MalformedZigzag", "at least one corner is required");
    SymbolicCluster s;
    s.poset = CyclicPoset::zzinf(2);
    const auto& P = s.poset;
    auto G = [&](long long i, long long j) { return Arc(P.point(0, i), P.point(1, j)); };

    std::vector<char> runs;
    for (size_t k = 0; k + 1 < corners.size(); ++k) {
        auto [i0, j0] = corners[k];
        auto [i1, j1] = corners[k + 1];
        char d;
        if (i1 > i0 && j1 == j0)
            d = 'i';
        else if (i1 == i0 && j1 < j0)
            d = 'j';
        else
            throw CycloError("MalformedZigzag", "run " + std::to_string(k) +
                                                    " must increase i or decrease j, and not both");
        if (!runs.empty() && runs.back() == d)
            throw CycloError("MalformedZigzag", "consecutive runs must alternate direction");
        runs.push_back(d);
        for (long long i = i0, j = j0; i != i1 || j != j1; d == 'i' ? ++i : --j)
            s.arcs.push_back(G(i, j));
    }

    auto [ik, jk] = corners.back();
    char next = runs.empty() ? 'i' : (runs.back() == 'i' ? 'j' : 'i');
    FanFamily a{std::nullopt, Tail{1, '-', ik}, Tail{1, '+', jk}, 0};
    FanFamily b = next == 'i' ? FanFamily{std::nullopt, Tail{1, '-', ik + 1}, Tail{1, '+', jk}, 0}
                              : FanFamily{std::nullopt, Tail{1, '-', ik}, Tail{1, '+', jk - 1}, 0};

    auto [i0, j0] = corners.front();
    char arriving = runs.empty() ? 'j' : (runs.front() == 'i' ? 'j' : 'i');
    FanFamily c, d;
    if (arriving == 'j') {
        c = {std::nullopt, Tail{0, '+', i0}, Tail{0, '-', j0 + 1}, 0};
        d = {std::nullopt, Tail{0, '+', i0 - 1}, Tail{0, '-', j0 + 1}, 0};
    } else {
        c = {std::nullopt, Tail{0, '+', i0 - 1}, Tail{0, '-', j0}, 0};
        d = {std::nullopt, Tail{0, '+', i0 - 1}, Tail{0, '-', j0 + 1}, 0};
    }
    s.families = {a, b, c, d};
    return canonicalize(std::move(s));
}

SymbolicCluster straight_zigzag_cluster()
{
    return build_zigzag_cluster({{0, 0}});
}

SymbolicCluster nested_two_limit_cluster()
{
    SymbolicCluster s;
    s.poset = CyclicPoset::zzinf(2);
    s.families = {
        {std::nullopt, Tail{0, '+', -1}, Tail{1, '-', 1}, 0},
        {std::nullopt, Tail{0, '+', -1}, Tail{1, '-', 2}, 0},
        {std::nullopt, Tail{1, '+', -1}, Tail{0, '-', 1}, 0},
        {std::nullopt, Tail{1, '+', -1}, Tail{0, '-', 2}, 0},
    };
    return canonicalize(std::move(s));
}

SymbolicCluster construct_triangulation_cluster(const CyclicPoset& p)
{
    if (p.finite())
        throw CycloError("Unsupported", "construction needs a Z(Z_inf) poset");
    SymbolicCluster s;
    s.poset = p;
    int L = p.limit_count();
    std::vector<CirclePoint> poly;
    for (int j = 0; j < L; ++j) {
        s.families.push_back({std::nullopt, Tail{j, '-', 1}, Tail{j, '+', -1}, 0});
        s.families.push_back({std::nullopt, Tail{j, '-', 2}, Tail{j, '+', -1}, 0});
        for (long long n = -1; n <= 1; ++n)
            poly.push_back(p.point(j, n));
    }
    for (size_t k = 2; k + 1 < poly.size(); ++k)
        s.arcs.emplace_back(poly[0], poly[k]);
    return canonicalize(std::move(s));
}

SymbolicCluster mutate_symbolic(const SymbolicCluster& s, const Arc& arc)
{
    SymbolicCluster out = s;
    bool explicit_arc = std::find(s.arcs.begin(), s.arcs.end(), arc) != s.arcs.end();
    std::optional<size_t> fam;
    if (!explicit_arc) {
        for (size_t k = 0; k < s.families.size(); ++k)
            if (auto i = s.families[k].index_of(s.poset, arc)) {
                if (*i > 0)
                    throw CycloError("MutationInsideTail",
                                     "arc " + arc.x.label() + "," + arc.y.label() + " lies inside a family tail");
                fam = k;
                break;
            }
        if (!fam)
            throw CycloError("NotInCluster", "arc " + arc.x.label() + "," + arc.y.label() + " is not in the cluster");
    }
    long long w = s.natural_window() + 20;
    std::vector<Arc> edges = s.materialize(w);
    if (!s.poset.finite()) {
        for (int j = 0; j < s.poset.limit_count(); ++j)
            for (long long n = -w; n < w; ++n)
                edges.emplace_back(s.poset.point(j, n), s.poset.point(j, n + 1));
    } else {
        const auto& c = s.poset.carrier();
        for (size_t i = 0; i < c.size(); ++i)
            edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    }
    Arc partner = flip_partner(edges, arc);
    if (explicit_arc)
        std::erase(out.arcs, arc);
    else
        out.families[*fam] = out.families[*fam].advanced(1);
    out.arcs.push_back(partner);
    return canonicalize(std::move(out));
}

ArComponent ar_component(const CyclicPoset& p, const Arc& a)
{
    if (a.x.kind != CirclePoint::Kind::Symbolic || a.y.kind != CirclePoint::Kind::Symbolic)
        throw CycloError("Unsupported", "AR components are defined for symbolic points");
    (void)p;
    ArComponent c;
    c.lo = std::min(a.x.limit, a.y.limit);
    c.hi = std::max(a.x.limit, a.y.limit);
    c.label = "C_{" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "}";
    c.type = c.lo == c.hi ? "ZA_inf" : "ZA_inf_inf";
    return c;
}

std::vector<Arc> ar_successors(const FrobeniusEngine& e, const Arc& a)
{
    const auto& P = e.poset();
    std::vector<Arc> out;
    for (Arc b : {Arc(a.x, P.successor(a.y)), Arc(P.successor(a.x), a.y)})
        if (e.object(b).status == ObjectStatus::Nonzero)
            out.push_back(b);
    return out;
}

std::vector<Arc> ar_predecessors(const FrobeniusEngine& e, const Arc& a)
{
    const auto& P = e.poset();
    std::vector<Arc> out;
    for (Arc b : {Arc(a.x, P.predecessor(a.y)), Arc(P.predecessor(a.x), a.y)})
        if (e.object(b).status == ObjectStatus::Nonzero)
            out.push_back(b);
    return out;
}

std::set<std::pair<int, int>> infinite_components(const SymbolicCluster& s)
{
    std::set<std::pair<int, int>> out;
    int L = s.poset.limit_count();
    for (const auto& f : s.families) {
        int a = f.fixed ? f.fixed->limit : f.first.interval(L);
        int b = f.moving.interval(L);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

SimplicialComplexK complex_K(const SymbolicCluster& s, long long window)
{
    SimplicialComplexK k;
    k.vertices = s.poset.window(window);
    std::set<CirclePoint> V(k.vertices.begin(), k.vertices.end());
    std::set<Arc> E;
    for (const auto& a : s.materialize(window))
        if (V.count(a.x) && V.count(a.y))
            E.insert(a);
    if (s.poset.finite()) {
        const auto& c = s.poset.carrier();
        for (size_t i = 0; i < c.size(); ++i)
            E.insert(Arc(c[i], c[(i + 1) % c.size()]));
    } else {
        for (int j = 0; j < s.poset.limit_count(); ++j)
            for (long long n = -window; n < window; ++n)
                E.insert(Arc(s.poset.point(j, n), s.poset.point(j, n + 1)));
    }
    std::map<CirclePoint, std::set<CirclePoint>> adj;
    for (const auto& a : E) {
        adj[a.x].insert(a.y);
        adj[a.y].insert(a.x);
    }
    for (const auto& a : E)
        for (const auto& t : adj[a.x])
            if (a.y < t && adj[a.y].count(t))
                k.triangles.push_back({a.x, a.y, t});
    k.edges.assign(E.begin(), E.end());
    return k;
}

SymbolicReport validate_symbolic(const FrobeniusEngine& e, const SymbolicCluster& s, long long window)
{
    SymbolicReport r;
    std::vector<CirclePoint> pts = s.poset.window(window);
    std::set<CirclePoint> V(pts.begin(), pts.end());
    std::vector<Arc> arcs;
    for (const auto& a : s.materialize(window))
        if (V.count(a.x) && V.count(a.y))
            arcs.push_back(a);
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            ++r.pairs_checked;
            if (!compatible(e, arcs[i], arcs[j]))
                r.conflicts.push_back({arcs[i], arcs[j]});
        }
    std::set<Arc> have(arcs.begin(), arcs.end());
    long long inner = window / 2;
    std::vector<CirclePoint> in;
    for (const auto& p : pts)
        if (std::abs(p.pos()) <= inner)
            in.push_back(p);
    for (size_t i = 0; i < in.size() && r.maximal_in_window; ++i)
        for (size_t j = i + 1; j < in.size(); ++j) {
            Arc c(in[i], in[j]);
            if (have.count(c) || e.object(c).status != ObjectStatus::Nonzero)
                continue;
            bool blocked = false;
            for (const auto& a : arcs)
                if (arcs_cross(a, c) && !compatible(e, a, c)) {
                    blocked = true;
                    break;
                }
            if (!blocked)
                for (const auto& a : arcs)
                    if (!compatible(e, a, c)) {
                        blocked = true;
                        break;
                    }
            if (!blocked) {
                r.maximal_in_window = false;
                r.addable = c;
                break;
            }
        }
    return r;
}

} // namespace cycloset
