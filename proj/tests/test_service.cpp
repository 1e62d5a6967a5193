#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycloset/service.hpp"

#include <httplib.h>

#include <filesystem>
#include <random>
#include <set>
#include <thread>

using namespace cycloset;

namespace {

json call(Service& s, const std::string& method, const std::string& path, const json& body = json::object(),
          int expected = 200)
{
    auto r = s.handle(method, path, method == "GET" ? "" : body.dump());
    CHECK_MESSAGE(r.status == expected, path << " -> " << r.body.dump());
    CHECK(r.body.at("schema_version") == api::kSchemaVersion);
    return r.body;
}

std::filesystem::path fresh_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("cycloset_test_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("catalog of built-in posets")
{
    Service s;
    auto body = call(s, "GET", "/api/posets");
    CHECK(body["posets"].size() >= 5);
    std::set<std::string> ids;
    for (const auto& p : body["posets"])
        ids.insert(p["id"].get<std::string>());
    CHECK(ids.count("zn:24:rot=1/8"));
    CHECK(ids.count("zz:2"));
}

TEST_CASE("session lifecycle: create, flip twice, history")
{
    Service s;
    auto created = call(s, "POST", "/api/session", {{"poset", "zn:8"}});
    std::string id = created["id"];
    CHECK(id == "s1");
    CHECK(created["svg"].get<std::string>().find("<svg") != std::string::npos);
    std::string seed_hash = created["hash"];
    auto arc = created["cluster"]["arcs"][1];
    auto once = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", arc}});
    CHECK(once["hash"] != seed_hash);
    CHECK(once["ext_changes"]["removed_to_added"] == 1);
    auto twice = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", once["exchange_partner"]}});
    CHECK(twice["hash"] == seed_hash);
    auto hist = call(s, "GET", "/api/session/" + id + "/history");
    CHECK(hist["history"].size() == 2);
    CHECK(hist["seed_hash"] == seed_hash);
    CHECK(hist["hash"] == seed_hash);
}

TEST_CASE("neighbors: one flip per mutable arc")
{
    Service s;
    for (const char* poset : {"zn:7", "zn:6:id"}) {
        auto created = call(s, "POST", "/api/session", {{"poset", poset}});
        auto nb = call(s, "GET", "/api/session/" + created["id"].get<std::string>() + "/neighbors");
        auto P = poset_from_json(poset);
        std::vector<Arc> arcs;
        for (const auto& a : created["cluster"]["arcs"])
            arcs.push_back(arc_from_json(P, a));
        CHECK(nb["neighbors"].size() == mutable_arcs(P, Cluster(arcs)).size());
    }
}

TEST_CASE("error statuses")
{
    Service s;
    call(s, "GET", "/api/session/nope/history", {}, 404);
    auto created = call(s, "POST", "/api/session", {{"poset", "zn:6:id"}});
    std::string id = created["id"];
    auto frozen = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", {0, 1}}}, 409);
    CHECK(frozen["error"]["code"] == "FrozenArc");
    auto missing = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", {1, 4}}}, 409);
    CHECK(missing["error"]["code"] == "NotInCluster");
    auto theta = call(s, "POST", "/api/theta", {{"poset", "zn:12"}, {"theta", "1/3"}}, 422);
    CHECK(theta["error"]["code"] == "NoClusterStructure");
    auto bad_seed = call(s, "POST", "/api/session", {{"poset", "zn:6"}, {"seed", {{0, 3}}}}, 422);
    CHECK(bad_seed["error"]["code"] == "InvalidCluster");
    auto r = s.handle("POST", "/api/homdim", "{not json");
    CHECK(r.status == 400);
    CHECK(s.handle("GET", "/api/unknown", "").status == 404);
}

TEST_CASE("rotation session never leaves its 132 clusters")
{
    Service s;
    auto created = call(s, "POST", "/api/session", {{"poset", "zn:24:rot=1/8"}});
    std::string id = created["id"];
    std::set<std::string> hashes{created["hash"].get<std::string>()};
    json cluster = created["cluster"];
    std::mt19937 rng(2);
    for (int step = 0; step < 3000; ++step) {
        auto arcs = cluster["arcs"];
        auto out = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", arcs[rng() % arcs.size()]}});
        hashes.insert(out["hash"].get<std::string>());
        cluster = out["cluster"];
    }
    CHECK(hashes.size() <= 132);
    CHECK(hashes.size() > 100);
}

TEST_CASE("symbolic session on the straight zig-zag")
{
    Service s;
    auto created = call(s, "POST", "/api/session", {{"poset", "zz:2"}, {"seed", "straight_zigzag"}});
    std::string id = created["id"];
    auto once = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", {"0:0", "1:0"}}});
    CHECK(once["exchange_partner"] == json::array({"0:1", "1:1"}));
    auto twice = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", {"0:1", "1:1"}}});
    CHECK(twice["hash"] == created["hash"]);
    auto inside = call(s, "POST", "/api/session/" + id + "/mutate", {{"arc", {"0:5", "1:-5"}}}, 409);
    CHECK(inside["error"]["code"] == "MutationInsideTail");
    auto nb = call(s, "GET", "/api/session/" + id + "/neighbors");
    CHECK(nb["neighbors"].size() >= 1);
}

TEST_CASE("stateless endpoints")
{
    Service s;
    auto hom = call(s, "POST", "/api/homdim", {{"poset", "zn:6"}, {"from", "0,3"}, {"to", "1,4"}, {"ext", true}});
    CHECK(hom["ext1_dim"] == 1);
    auto tri = call(s, "POST", "/api/triangulation-check", {{"cluster", "nested_two_limit"}});
    CHECK(tri["triangulation"] == false);
    CHECK(tri["rho"] == json::array({json::array({0, 1})}));
    auto cactus = call(s, "POST", "/api/cactus", {{"cluster", "ten_limit_cactus"}});
    CHECK(cactus["disks"].size() == 6);
    CHECK(cactus["round_trip"] == true);
    auto rho = call(s, "POST", "/api/cactus", {{"rho", {{"limits", 4}, {"classes", {{0, 2}, {1, 3}}}}}}, 422);
    CHECK(rho["error"]["code"] == "CrossingPartition");
}

TEST_CASE("identical requests give identical bodies")
{
    Service a, b;
    json req{{"poset", "zn:9"}};
    auto ca = call(a, "POST", "/api/session", req), cb = call(b, "POST", "/api/session", req);
    CHECK(ca.dump() == cb.dump());
    json flip{{"arc", ca["cluster"]["arcs"][0]}};
    CHECK(call(a, "POST", "/api/session/s1/mutate", flip).dump() == call(b, "POST", "/api/session/s1/mutate", flip).dump());
    json hom{{"poset", "zn:7"}, {"from", "0,2"}, {"to", "1,5"}, {"ext", true}};
    CHECK(call(a, "POST", "/api/homdim", hom).dump() == call(b, "POST", "/api/homdim", hom).dump());
}

TEST_CASE("sessions survive a restart through the state directory")
{
    auto dir = fresh_dir("state");
    std::string hash;
    {
        Service s(dir);
        auto created = call(s, "POST", "/api/session", {{"poset", "zn:8"}});
        auto out = call(s, "POST", "/api/session/s1/mutate", {{"arc", created["cluster"]["arcs"][2]}});
        hash = out["hash"];
    }
    Service restored(dir);
    CHECK(restored.session_count() == 1);
    auto hist = call(restored, "GET", "/api/session/s1/history");
    CHECK(hist["hash"] == hash);
    CHECK(hist["history"].size() == 1);
    auto next = call(restored, "POST", "/api/session", {{"poset", "zn:5"}});
    CHECK(next["id"] == "s2");
    std::filesystem::remove_all(dir);
}

TEST_CASE("concurrent flips keep each history replayable")
{
    Service s;
    std::vector<std::string> ids;
    for (int i = 0; i < 4; ++i)
        ids.push_back(call(s, "POST", "/api/session", {{"poset", "zn:9"}})["id"]);
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            std::mt19937 rng(t);
            for (int k = 0; k < 40; ++k) {
                const auto& id = ids[rng() % ids.size()];
                auto nb = s.handle("GET", "/api/session/" + id + "/neighbors", "");
                if (nb.status != 200 || nb.body["neighbors"].empty())
                    continue;
                auto arc = nb.body["neighbors"][rng() % nb.body["neighbors"].size()]["removed"];
                // another thread may have flipped first; 409 is then expected
                auto r = s.handle("POST", "/api/session/" + id + "/mutate", json{{"arc", arc}}.dump());
                CHECK((r.status == 200 || r.status == 409));
            }
        });
    for (auto& w : workers)
        w.join();
    auto P = CyclicPoset::zn(9);
    FrobeniusEngine e(P);
    for (const auto& id : ids) {
        auto hist = call(s, "GET", "/api/session/" + id + "/history");
        Cluster c = api::default_seed(e);
        for (const auto& h : hist["history"]) {
            c = mutate(e, c, arc_from_json(P, h["arc"]));
            CHECK(c.hash_hex() == h["hash"]);
        }
        CHECK(c.hash_hex() == hist["hash"]);
    }
}

TEST_CASE("HTTP round trip")
{
    Service service;
    httplib::Server server;
    service.install(server);
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread t([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    auto res = client.Get("/api/posets");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto posted = client.Post("/api/session", R"({"poset":"zn:6"})", "application/json");
    REQUIRE(posted);
    CHECK(posted->status == 200);
    CHECK(json::parse(posted->body)["id"] == "s1");
    auto missing = client.Get("/api/session/zzz/neighbors");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    server.stop();
    t.join();
}
