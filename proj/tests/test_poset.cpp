#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycloset/pco.hpp"
#include "cycloset/svg.hpp"

#include <cmath>
#include <random>

using namespace cycloset;

namespace {

// c(x,y,z) = g(y,z) - g(x,z) + g(x,y) with g(x,x) = 0 and g(x,y) + g(y,x) = r
std::map<std::array<long long, 3>, int> cocycle_from_g(const std::vector<std::vector<int>>& g)
{
    std::map<std::array<long long, 3>, int> t;
    long long n = (long long)g.size();
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y)
            for (long long z = 0; z < n; ++z)
                t[{x, y, z}] = g[y][z] - g[x][z] + g[x][y];
    return t;
}

std::vector<std::string> names(size_t n)
{
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

} // namespace

TEST_CASE("winding cocycle on Z_n and on angle sets is a reduced cocycle")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(validate_cocycle(CyclicPoset::zn(n).cocycle(), CyclicPoset::zn(n).carrier()).ok());
    auto p = CyclicPoset::angles({Rational(0), Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(5, 6)});
    CHECK(validate_cocycle(p.cocycle(), p.carrier()).ok());
}

TEST_CASE("winding cocycle values on three points of Z_4")
{
    auto p = CyclicPoset::zn(4);
    const auto& x = p.carrier();
    CHECK(p.c(x[0], x[1], x[2]) == 0);
    CHECK(p.c(x[0], x[2], x[1]) == 1);
    CHECK(p.c(x[0], x[1], x[0]) == 1);
    CHECK(p.c(x[0], x[0], x[1]) == 0);
}

TEST_CASE("symbolic carrier of Z(Z_inf) passes validation on a window")
{
    for (int L = 1; L <= 4; ++L) {
        auto p = CyclicPoset::zzinf(L);
        CHECK(validate_cocycle(p.cocycle(), p.window(2)).ok());
    }
}

TEST_CASE("restricting a valid cocycle to a subset stays valid")
{
    std::mt19937 rng(7);
    auto p = CyclicPoset::zn(9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<CirclePoint> sub;
        for (const auto& x : p.carrier())
            if (rng() % 2)
                sub.push_back(x);
        CHECK(validate_cocycle(p.cocycle(), sub).ok());
    }
}

TEST_CASE("a table with a broken cocycle identity is rejected with a witness")
{
    auto t = cocycle_from_g({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}});
    t[{0, 1, 2}] = 5;
    auto p = CyclicPoset::table(names(3), CocycleProvider::table(t));
    auto rep = validate_cocycle(p.cocycle(), p.carrier());
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().axiom == "delta c != 0");
}

TEST_CASE("missing table entries raise MissingEntry")
{
    std::map<std::array<long long, 3>, int> t{{{0, 1, 2}, 0}};
    auto p = CyclicPoset::table(names(3), CocycleProvider::table(t));
    try {
        validate_cocycle(p.cocycle(), p.carrier());
        FAIL("expected MissingEntry");
    } catch (const CycloError& e) {
        CHECK(e.code() == "MissingEntry");
    }
}

TEST_CASE("b-function recovers the cocycle as its coboundary")
{
    for (int n = 2; n <= 7; ++n) {
        auto p = CyclicPoset::zn(n);
        auto b = b_function(p);
        auto c = cocycle_from_b(b);
        const auto& X = p.carrier();
        for (size_t i = 0; i < X.size(); ++i)
            for (size_t j = 0; j < X.size(); ++j)
                for (size_t k = 0; k < X.size(); ++k)
                    CHECK(c(X[i], X[j], X[k]) == p.c(X[i], X[j], X[k]));
    }
}

TEST_CASE("covering poset of Z_n satisfies the axioms and property (*)")
{
    for (int n = 2; n <= 7; ++n) {
        auto cov = build_covering(CyclicPoset::zn(n));
        auto rep = check_covering_axioms(cov, 2);
        CHECK(rep.ok());
        CHECK(check_zposet_star(cov, 1).ok);
    }
}

TEST_CASE("lifted order compares levels through b")
{
    auto cov = build_covering(CyclicPoset::zn(4));
    CHECK(cov.leq(0, 0, 1, 0));
    CHECK_FALSE(cov.leq(1, 0, 0, 0));
    CHECK(cov.leq(1, 0, 0, 1));
}

TEST_CASE("symbolic cyclic order agrees with the arctan embedding")
{
    auto p = CyclicPoset::zzinf(3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> lim(0, 2), pos(-50, 50);
    int checked = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        auto a = p.point(lim(rng), pos(rng)), b = p.point(lim(rng), pos(rng)), c = p.point(lim(rng), pos(rng));
        if (a == b || b == c || a == c)
            continue;
        double ta = drawing_turns(p, a), tb = drawing_turns(p, b), tc = drawing_turns(p, c);
        auto rel = [&](double t) { return std::fmod(t - ta + 2.0, 1.0); };
        bool expected = rel(tb) < rel(tc);
        CHECK(cyclic_order(a, b, c) == expected);
        ++checked;
    }
    CHECK(checked > 19000);
}

TEST_CASE("successor and predecessor on symbolic points")
{
    auto p = CyclicPoset::zzinf(2);
    CHECK(p.successor(p.point(0, 3)) == p.point(0, 4));
    CHECK(p.predecessor(p.point(1, -2)) == p.point(1, -3));
}

TEST_CASE("admissible subsets need four points")
{
    CHECK_FALSE(is_admissible({"zn", 3, {}}).admissible);
    CHECK(is_admissible({"zn", 4, {}}).admissible);
}

TEST_CASE("complete cyclic order on three points is a partial cyclic order")
{
    PartialCyclicOrder d;
    d.size = 3;
    d.delta = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    CHECK(is_partial_cyclic_order(d).ok);
}

TEST_CASE("order missing a rotation fails the rotation axiom")
{
    PartialCyclicOrder d;
    d.size = 3;
    d.delta = {{0, 1, 2}};
    auto chk = is_partial_cyclic_order(d);
    CHECK_FALSE(chk.ok);
    CHECK(chk.axiom == "(a)");
}

TEST_CASE("order containing both orientations fails antisymmetry")
{
    PartialCyclicOrder d;
    d.size = 3;
    d.delta = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto chk = is_partial_cyclic_order(d);
    CHECK_FALSE(chk.ok);
    CHECK(chk.axiom == "(b)");
}

TEST_CASE("bounded cocycles always give partial cyclic orders")
{
    std::mt19937 rng(3);
    int found = 0;
    for (long long attempt = 0; found < 1000 && attempt < 2'000'000; ++attempt) {
        int m = 3 + (int)(rng() % 4);
        int r = 2 + (int)(rng() % 2);
        std::vector<std::vector<int>> g(m, std::vector<int>(m, 0));
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                g[x][y] = (int)(rng() % (r + 1));
                g[y][x] = r - g[x][y];
            }
        auto t = cocycle_from_g(g);
        bool bounded = std::all_of(t.begin(), t.end(), [&](const auto& kv) { return kv.second >= 0 && kv.second <= r; });
        if (!bounded)
            continue;
        ++found;
        auto p = CyclicPoset::table(names(m), CocycleProvider::table(t));
        REQUIRE(validate_cocycle(p.cocycle(), p.carrier()).ok());
        auto res = pco_from_bounded_cocycle(p, r);
        CHECK(res.check.ok);
        CHECK(res.identity_i);
        CHECK(res.identity_ii);
    }
    CHECK(found == 1000);
}

TEST_CASE("pco construction rejects r < 2")
{
    auto p = CyclicPoset::zn(4);
    CHECK_THROWS_AS(pco_from_bounded_cocycle(p, 1), CycloError);
}

TEST_CASE("linear order with an isolated point admits no bounded cocycle")
{
    auto d = delta_lin_isolated_zero(6);
    CHECK(is_partial_cyclic_order(d).ok);
    auto r = search_bounded_cocycle(d, 3, 3);
    CHECK(r.status == SearchResult::Status::Infeasible);
}

TEST_CASE("search results realize the order exactly")
{
    for (int m = 3; m <= 6; ++m) {
        auto d = delta_lin(m);
        auto r = search_bounded_cocycle(d, 3, 3);
        if (r.status != SearchResult::Status::Found)
            continue;
        auto t = cocycle_from_g(r.g);
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z) {
                    int v = t[{x, y, z}];
                    CHECK(v >= 0);
                    CHECK(v <= 3);
                    if (x != y && y != z && x != z)
                        CHECK((v == r.r) == d.contains(x, y, z));
                }
    }
}
