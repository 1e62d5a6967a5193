#include "cycloset/pco.hpp"

#include <algorithm>
#include <functional>

namespace cycloset {

PcoCheck is_partial_cyclic_order(const PartialCyclicOrder& d)
{
    PcoCheck out;
    for (const auto& t : d.delta) {
        auto [x, y, z] = t;
        if (x == y || y == z || x == z) {
            out = {false, "distinct", {t}};
            return out;
        }
        if (!d.contains(y, z, x) || !d.contains(z, x, y)) {
            out = {false, "(a)", {t}};
            return out;
        }
        if (d.contains(x, z, y)) {
            out = {false, "(b)", {t, {x, z, y}}};
            return out;
        }
    }
    for (const auto& t1 : d.delta)
        for (const auto& t2 : d.delta) {
            if (t1[0] != t2[0] || t1[2] != t2[1])
                continue;
            int x = t1[0], y = t1[1], w = t2[2];
            if (y != w && !d.contains(x, y, w)) {
                out = {false, "(c)", {t1, t2}};
                return out;
            }
        }
    return out;
}

PcoResult pco_from_bounded_cocycle(const CyclicPoset& p, int r)
{
    if (r < 2)
        throw CycloError("HypothesisViolated", "r >= 2 is required");
    const auto& pts = p.carrier();
    int n = (int)pts.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != y && p.c(pts[x], pts[y], pts[x]) != r)
                throw CycloError("HypothesisViolated", "(2) fails: c(" + pts[x].label() + "," + pts[y].label() +
                                                           "," + pts[x].label() + ") != r");
            for (int z = 0; z < n; ++z)
                if (p.c(pts[x], pts[y], pts[z]) > r)
                    throw CycloError("HypothesisViolated", "(1) fails: c(" + pts[x].label() + "," +
                                                               pts[y].label() + "," + pts[z].label() + ") > r");
        }
    PcoResult res;
    res.order.size = n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (x == y || y == z || x == z)
                    continue;
                int a = p.c(pts[x], pts[y], pts[z]);
                int b = p.c(pts[x], pts[z], pts[y]);
                if (a == r)
                    res.order.delta.insert({x, y, z});
                if (a + b != r)
                    res.identity_i = false;
                if (a < r && b < r && (a <= 0 || b <= 0))
                    res.identity_ii = false;
            }
    res.check = is_partial_cyclic_order(res.order);
    return res;
}

PartialCyclicOrder delta_lin(int m)
{
    PartialCyclicOrder d;
    d.size = m;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            for (int z = 0; z < m; ++z)
                if ((long long)(x - y) * (y - z) * (z - x) > 0)
                    d.delta.insert({x, y, z});
    return d;
}

PartialCyclicOrder delta_lin_isolated_zero(int m)
{
    PartialCyclicOrder d = delta_lin(m);
    for (auto it = d.delta.begin(); it != d.delta.end();) {
        const auto& t = *it;
        if (t[0] == 0 || t[1] == 0 || t[2] == 0)
            it = d.delta.erase(it);
        else
            ++it;
    }
    return d;
}

namespace {

struct Search {
    const PartialCyclicOrder& d;
    int m, r, cap;
    unsigned long long budget;
    unsigned long long explored = 0;
    bool timed_out = false;
    std::vector<std::pair<int, int>> vars;
    std::vector<std::vector<int>> g;
    std::vector<std::vector<int>> var_of;
    std::vector<std::vector<Triple>> checks;

    Search(const PartialCyclicOrder& d_, int r_, int cap_, unsigned long long budget_)
        : d(d_), m(d_.size), r(r_), cap(cap_), budget(budget_)
    {
        g.assign(m, std::vector<int>(m, 0));
        var_of.assign(m, std::vector<int>(m, -1));
        for (int u = 1; u < m; ++u) {
            g[u][0] = r;
            for (int v = u + 1; v < m; ++v) {
                var_of[u][v] = var_of[v][u] = (int)vars.size();
                vars.push_back({u, v});
            }
        }
        checks.assign(vars.size() + 1, {});
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z) {
                    if (x == y || y == z || x == z)
                        continue;
                    int last = -1;
                    for (auto [a, b] : {std::pair{y, z}, {x, z}, {x, y}})
                        last = std::max(last, var_of[a][b]);
                    checks[last + 1].push_back({x, y, z});
                }
    }

    int c(int x, int y, int z) const { return g[y][z] - g[x][z] + g[x][y]; }

    bool ok_at(size_t level) const
    {
        int top = std::min(r, cap);
        for (const auto& t : checks[level]) {
            int v = c(t[0], t[1], t[2]);
            if (v < 0 || v > top)
                return false;
            if ((v == r) != d.contains(t[0], t[1], t[2]))
                return false;
        }
        return true;
    }

    bool run(size_t k)
    {
        if (++explored > budget) {
            timed_out = true;
            return false;
        }
        if (k == vars.size())
            return true;
        auto [u, v] = vars[k];
        for (int val = 0; val <= std::min(r, cap); ++val) {
            g[u][v] = val;
            g[v][u] = r - val;
            if (ok_at(k + 1) && run(k + 1))
                return true;
            if (timed_out)
                return false;
        }
        return false;
    }
};

} // namespace

SearchResult search_bounded_cocycle(const PartialCyclicOrder& d, int r_max, int cap, unsigned long long budget)
{
    SearchResult res;
    for (int r = 2; r <= r_max; ++r) {
        if (cap < r) {
            res.rejected_r.push_back(r);
            continue;
        }
        Search s(d, r, cap, budget - std::min(budget, res.explored));
        bool found = s.ok_at(0) && s.run(0);
        res.explored += s.explored;
        if (s.timed_out) {
            res.status = SearchResult::Status::Timeout;
            return res;
        }
        if (found) {
            res.status = SearchResult::Status::Found;
            res.r = r;
            res.g = s.g;
            for (int x = 0; x < d.size; ++x)
                for (int y = 0; y < d.size; ++y)
                    for (int z = 0; z < d.size; ++z)
                        res.table[{x, y, z}] = s.c(x, y, z);
            return res;
        }
        res.rejected_r.push_back(r);
    }
    res.status = SearchResult::Status::Infeasible;
    return res;
}

} // namespace cycloset
