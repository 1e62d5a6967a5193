#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycloset/theta.hpp"

#include <map>
#include <random>
#include <set>

using namespace cycloset;

namespace {

unsigned long long binomial(int n, int k)
{
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Triangulations of an N-gon: C(2N-4, N-2) / (N-1)
unsigned long long triangulation_count(int N)
{
    return binomial(2 * N - 4, N - 2) / (N - 1);
}

std::string fingerprint(const Cluster& c)
{
    std::string s;
    for (const auto& a : c.arcs)
        s += a.x.label() + "," + a.y.label() + ";";
    return s;
}

} // namespace

TEST_CASE("cluster counts on Z_N canonical follow the triangulation formula")
{
    for (int N = 4; N <= 9; ++N) {
        FrobeniusEngine e(CyclicPoset::zn(N));
        auto all = enumerate_clusters(e);
        CHECK(all.size() == triangulation_count(N));
        for (const auto& c : all)
            CHECK(c.arcs.size() == (size_t)N - 3);
    }
}

TEST_CASE("every enumerated cluster passes the cluster check")
{
    for (int N = 4; N <= 7; ++N)
        for (auto a : {Automorphism::canonical(), Automorphism::identity()}) {
            FrobeniusEngine e(CyclicPoset::zn(N, a));
            for (const auto& c : enumerate_clusters(e))
                CHECK(is_cluster(e, c.arcs).ok);
        }
}

TEST_CASE("pentagon with the identity has five clusters of seven objects")
{
    FrobeniusEngine e(CyclicPoset::zn(5, Automorphism::identity()));
    auto all = enumerate_clusters(e);
    CHECK(all.size() == 5);
    for (const auto& c : all)
        CHECK(c.arcs.size() == 7);
    CHECK(frozen_arcs(e.poset()).size() == 5);
}

TEST_CASE("cluster check reports defects")
{
    FrobeniusEngine e(CyclicPoset::zn(6));
    const auto& X = e.poset().carrier();
    auto crossing = is_cluster(e, {Arc(X[0], X[3]), Arc(X[1], X[4]), Arc(X[0], X[2])});
    CHECK_FALSE(crossing.ok);
    CHECK(crossing.witness.size() == 2);
    auto short_of = is_cluster(e, {Arc(X[0], X[3])});
    CHECK_FALSE(short_of.ok);
    CHECK(short_of.defect == "not maximal");
    CHECK_FALSE(is_cluster(e, {Arc(X[0], X[1]), Arc(X[0], X[3]), Arc(X[3], X[5]), Arc(X[0], X[2])}).ok);
}

TEST_CASE("fewer than four points cannot carry clusters")
{
    FrobeniusEngine e(CyclicPoset::zn(3));
    CHECK_THROWS_AS(enumerate_clusters(e), CycloError);
}

TEST_CASE("mutation is an involution with points in cyclic order")
{
    FrobeniusEngine e(CyclicPoset::zn(8));
    for (const auto& c : enumerate_clusters(e))
        for (const auto& arc : c.arcs) {
            auto m = mutation_triangle(e, c, arc);
            CHECK(is_cluster(e, m.cluster.arcs).ok);
            CHECK(m.added != arc);
            CHECK(arcs_cross(m.added, arc));
            CHECK(mutate(e, m.cluster, m.added) == c);
            // x, a, y, b in cyclic order
            CirclePoint x = arc.x, y = arc.y, b = m.middle_left.y == x ? m.middle_left.x : m.middle_left.y;
            CirclePoint a = m.middle_right.x == y ? m.middle_right.y : m.middle_right.x;
            CHECK(Arc(a, b) == m.added);
            CHECK(cyclic_order(x, a, y));
            CHECK(cyclic_order(y, b, x));
        }
}

TEST_CASE("mutation refuses frozen and foreign arcs")
{
    FrobeniusEngine e(CyclicPoset::zn(6, Automorphism::identity()));
    auto c = enumerate_clusters(e).front();
    const auto& X = e.poset().carrier();
    try {
        mutate(e, c, Arc(X[0], X[1]));
        FAIL("expected FrozenArc");
    } catch (const CycloError& err) {
        CHECK(err.code() == "FrozenArc");
    }
    Arc outside;
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = i + 2; j < X.size(); ++j)
            if (!c.contains(Arc(X[i], X[j])))
                outside = Arc(X[i], X[j]);
    try {
        mutate(e, c, outside);
        FAIL("expected NotInCluster");
    } catch (const CycloError& err) {
        CHECK(err.code() == "NotInCluster");
    }
}

TEST_CASE("exchange graph of Z_7 is the associahedron skeleton")
{
    FrobeniusEngine e(CyclicPoset::zn(7));
    auto all = enumerate_clusters(e);
    auto g = exchange_graph(e, all.front(), 10000);
    CHECK_FALSE(g.truncated);
    CHECK(g.nodes.size() == all.size());
    CHECK(g.edges.size() == all.size() * 4 / 2);
    std::map<size_t, int> degree;
    for (auto [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    for (auto [node, d] : degree)
        CHECK(d == 4);
}

TEST_CASE("exchange graph budget marks truncation")
{
    FrobeniusEngine e(CyclicPoset::zn(9));
    auto g = exchange_graph(e, enumerate_clusters(e).front(), 10);
    CHECK(g.truncated);
    CHECK(g.nodes.size() == 10);
}

TEST_CASE("DOT export labels nodes by cluster hash")
{
    FrobeniusEngine e(CyclicPoset::zn(5));
    auto g = exchange_graph(e, enumerate_clusters(e).front(), 100);
    auto dot = to_dot(g);
    for (const auto& c : g.nodes)
        CHECK(dot.find(c.hash_hex()) != std::string::npos);
}

TEST_CASE("cluster hashes are distinct across all clusters of Z_9")
{
    FrobeniusEngine e(CyclicPoset::zn(9));
    std::set<uint64_t> seen;
    std::set<std::string> prints;
    for (const auto& c : enumerate_clusters(e)) {
        seen.insert(c.hash());
        prints.insert(fingerprint(c));
    }
    CHECK(seen.size() == prints.size());
}

TEST_CASE("quivers have no loops or 2-cycles and mutate like DWZ")
{
    for (auto a : {Automorphism::canonical(), Automorphism::identity()}) {
        FrobeniusEngine e(CyclicPoset::zn(6, a));
        for (const auto& c : enumerate_clusters(e)) {
            auto q = cluster_quiver(e, c);
            CHECK_FALSE(q.has_loops());
            CHECK_FALSE(q.has_two_cycles());
            for (const auto& arc : mutable_arcs(e.poset(), c))
                CHECK(quiver_mutation_check(e, c, arc));
        }
    }
}

TEST_CASE("DWZ mutation is an involution on exchange matrices")
{
    std::vector<std::vector<int>> b{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
    for (size_t k = 0; k < 3; ++k)
        CHECK(dwz_mutate(dwz_mutate(b, k), k) == b);
    auto m = dwz_mutate(b, 1);
    CHECK(m[0][2] == 1);
    CHECK(m[0][1] == -1);
}

TEST_CASE("spaced-out embedding preserves homs and clusters")
{
    for (int n = 4; n <= 6; ++n) {
        auto r = verify_J(n);
        CHECK(r.ok());
        CHECK(r.pairs_checked > 0);
        CHECK(r.clusters_checked == triangulation_count(n));
    }
    CHECK(verify_J(4).shift_intersection == 0);
}

TEST_CASE("rotation admissibility")
{
    CHECK(rotation_admissible(Rational(1, 8)).cluster_structure);
    CHECK(rotation_admissible(Rational(1, 8)).N == 8);
    CHECK_FALSE(rotation_admissible(Rational(1, 3)).cluster_structure);
    CHECK_FALSE(rotation_admissible(Rational(2, 9)).cluster_structure);
    CHECK_FALSE(rotation_admissible(Rational(1, 2)).cluster_structure);
    FrobeniusEngine e(CyclicPoset::zn(12, Automorphism::rotation(Rational(1, 3))));
    CHECK_THROWS_AS(enumerate_theta_clusters(e), CycloError);
}

TEST_CASE("rotation by 1/8 turn on Z_24 gives 396 clusters in components of 132")
{
    FrobeniusEngine e(CyclicPoset::zn(24, Automorphism::rotation(Rational(1, 8))));
    auto all = enumerate_theta_clusters(e);
    CHECK(all.size() == 396);
    CHECK(all.size() == 3 * triangulation_count(8));
    std::set<Cluster> unseen(all.begin(), all.end());
    while (!unseen.empty()) {
        Cluster seed = *unseen.begin();
        auto g = exchange_graph(e, seed, 1000);
        CHECK(g.nodes.size() == 132);
        auto orb = orbit(e.poset(), seed.arcs.front().x);
        std::set<CirclePoint> O(orb.begin(), orb.end());
        for (const auto& c : g.nodes) {
            for (const auto& a : c.arcs) {
                CHECK(O.count(a.x));
                CHECK(O.count(a.y));
            }
            unseen.erase(c);
        }
    }
}

TEST_CASE("an orbit cluster is not maximal among all compatible objects")
{
    FrobeniusEngine e(CyclicPoset::zn(24, Automorphism::rotation(Rational(1, 8))));
    auto c = orbit_cluster(e.poset(), e.poset().carrier()[0], {{0, 2}, {2, 4}, {4, 6}, {0, 6}, {2, 6}});
    CHECK(c.arcs.size() == 5);
    CHECK(is_cluster(e, c.arcs).ok);
    auto s = extend_to_maximal(e, c, 1000000);
    CHECK_FALSE(s.truncated);
    CHECK(s.largest == 17);
}
