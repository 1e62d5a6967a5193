#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycloset/service.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace cycloset;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(CYCLOSET_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string endpoint(const std::string& path, const json& body)
{
    Service s;
    auto r = s.handle("POST", path, body.dump());
    return r.body.dump(2) + "\n";
}

std::string temp_file(const std::string& name, const json& content)
{
    auto path = std::filesystem::temp_directory_path() / ("cycloset_cli_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << content.dump();
    return path.string();
}

} // namespace

TEST_CASE("text output of the documented examples")
{
    auto r = run("clusters zn:8 --count");
    CHECK(r.code == 0);
    CHECK(r.out == "132\n");
    r = run("theta zn:24 --theta 1/8 --count");
    CHECK(r.code == 0);
    CHECK(r.out == "396\n");
    r = run("homdim zn:6 --from 0,1 --to 0,1");
    CHECK(r.out == "0\n");
}

TEST_CASE("exit codes")
{
    CHECK(run("clusters").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("homdim zn:6 --from 0,x --to 0,2").code == 2);
    CHECK(run("triangulation-check straight_zigzag").code == 0);
    CHECK(run("triangulation-check nested_two_limit").code == 1);
    CHECK(run("theta zn:12 --theta 1/3").code == 1);
}

TEST_CASE("JSON output equals the endpoint body")
{
    CHECK(run("homdim zn:7 --from 0,3 --to 2,5 --ext --format json").out ==
          endpoint("/api/homdim", {{"poset", "zn:7"}, {"from", "0,3"}, {"to", "2,5"}, {"ext", true}}));
    CHECK(run("triangulation-check nested_two_limit --format json").out ==
          endpoint("/api/triangulation-check", {{"cluster", "nested_two_limit"}}));
    CHECK(run("cactus ten_limit_cactus --format json").out ==
          endpoint("/api/cactus", {{"cluster", "ten_limit_cactus"}}));
    CHECK(run("clusters zn:6 --list --format json").out ==
          endpoint("/api/clusters", {{"poset", "zn:6"}, {"list", true}}));
    CHECK(run("theta zn:24 --theta 1/8 --format json").out ==
          endpoint("/api/theta", {{"poset", "zn:24"}, {"theta", "1/8"}, {"maximal", false}}));
    CHECK(run("embed-j --n 5 --format json").out == endpoint("/api/embed-j", {{"n", 5}}));

    json rho{{"limits", 10}, {"classes", {{0, 3, 6}, {1, 2}, {4, 5}, {7, 9}, {8}}}};
    CHECK(run("cactus --rho " + temp_file("rho.json", rho) + " --format json").out ==
          endpoint("/api/cactus", {{"rho", rho}}));

    json cluster{{"poset", "zn:6"}, {"arcs", {{0, 2}, {0, 3}, {0, 4}}}};
    CHECK(run("mutate --cluster " + temp_file("c.json", cluster) + " --arc 0,3 --format json").out ==
          endpoint("/api/mutate", {{"cluster", cluster}, {"arc", "0,3"}}));
}

TEST_CASE("mutation through the CLI matches a session flip")
{
    Service s;
    auto created = s.handle("POST", "/api/session", R"({"poset":"zn:6"})").body;
    json cluster{{"poset", "zn:6"}, {"arcs", created["cluster"]["arcs"]}};
    auto flip = s.handle("POST", "/api/session/s1/mutate", json{{"arc", "0,3"}}.dump()).body;
    auto cli = json::parse(run("mutate --cluster " + temp_file("seed.json", cluster) + " --arc 0,3 --format json").out);
    CHECK(cli == flip);
}

TEST_CASE("render and DOT files are written")
{
    auto svg = std::filesystem::temp_directory_path() / ("cycloset_cli_" + std::to_string(::getpid()) + ".svg");
    json cluster{{"poset", "zn:8"}, {"arcs", {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}}};
    CHECK(run("render " + temp_file("r.json", cluster) + " --out " + svg.string()).code == 0);
    std::ifstream in(svg);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text.find("viewBox=\"-1.1 -1.1 2.2 2.2\"") != std::string::npos);
    auto dot = std::filesystem::temp_directory_path() / ("cycloset_cli_" + std::to_string(::getpid()) + ".dot");
    CHECK(run("exchange-graph zn:6 --dot " + dot.string()).code == 0);
    std::ifstream din(dot);
    std::string dtext((std::istreambuf_iterator<char>(din)), {});
    CHECK(dtext.rfind("graph exchange", 0) == 0);
}

TEST_CASE("cocycle and order commands")
{
    CHECK(run("validate-cocycle zn:6").code == 0);
    json broken{{"kind", "table"},
                {"carrier", {"a", "b", "c"}},
                {"cocycle", {{"a", "b", "c", 1}}}};
    CHECK(run("validate-cocycle " + temp_file("broken.json", broken)).code == 1);
    CHECK(run("covering zn:5").code == 0);
    CHECK(run("search-pco lin0 --m 6 --rmax 3 --cap 3").out.find("Infeasible") != std::string::npos);
}
