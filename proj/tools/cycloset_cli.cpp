#include "cycloset/service.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace cycloset;

namespace {

// A poset argument is a shorthand such as zn:8 or a descriptor file.
json poset_arg(const std::string& s)
{
    if (std::filesystem::is_regular_file(s))
        return load_json_file(s);
    return s;
}

// A cluster argument is a cluster file or a preset name.
json cluster_arg(const std::string& s)
{
    if (std::filesystem::is_regular_file(s))
        return load_json_file(s);
    return s;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw CycloError("ParseError", "cannot write " + path);
    out << text;
}

void print_fields(const json& body, std::initializer_list<const char*> skip = {})
{
    for (const auto& [k, v] : body.items()) {
        if (k == "schema_version" || std::find_if(skip.begin(), skip.end(), [&](const char* s) { return k == s; }) != skip.end())
            continue;
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cyclic posets, cluster categories and cactus decompositions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file, poset, cluster_path, arc, from, to, theta_text, seed_path, dot_out, svg_out, rho_path;
    std::string host = "127.0.0.1", state_dir;
    int r = 2, m = 0, rmax = 3, cap = 3, n = 4, port = 8080;
    unsigned long long budget = 5000;
    bool count = false, list = false, ext = false, maximal = false;

    auto* validate = app.add_subcommand("validate-cocycle", "Check reducedness, nonnegativity and the cocycle identity");
    validate->add_option("FILE", file, "Poset descriptor file or shorthand")->required();

    auto* covering = app.add_subcommand("covering", "Build the covering poset and check its axioms");
    covering->add_option("FILE", file)->required();

    auto* pco = app.add_subcommand("pco", "Partial cyclic order of a bounded cocycle");
    pco->add_option("FILE", file)->required();
    pco->add_option("--r", r, "Bound r")->required();

    auto* search = app.add_subcommand("search-pco", "Search for a bounded cocycle realizing an order");
    search->add_option("FILE", file, "Order file, or lin / lin0 for the linear order")->required();
    search->add_option("--m", m, "Ground set size");
    search->add_option("--rmax", rmax);
    search->add_option("--cap", cap);
    search->add_option("--budget", budget);

    auto* clusters = app.add_subcommand("clusters", "Enumerate the clusters of a finite poset");
    clusters->add_option("POSET", poset)->required();
    auto* count_flag = clusters->add_flag("--count", count);
    clusters->add_flag("--list", list)->excludes(count_flag);

    auto* mutate = app.add_subcommand("mutate", "Flip one arc of a cluster");
    mutate->add_option("--cluster", cluster_path)->required();
    mutate->add_option("--arc", arc, "Arc as \"x,y\"")->required();

    auto* exch = app.add_subcommand("exchange-graph", "Breadth-first exchange graph from a seed");
    exch->add_option("POSET", poset)->required();
    exch->add_option("--seed", seed_path, "Cluster file");
    exch->add_option("--budget", budget);
    exch->add_option("--dot", dot_out, "Write the graph in DOT format");

    auto* hom = app.add_subcommand("homdim", "Stable Hom dimension between two objects");
    hom->add_option("POSET", poset)->required();
    hom->add_option("--from", from)->required();
    hom->add_option("--to", to)->required();
    hom->add_flag("--ext", ext, "Also report Ext^1");

    auto* theta = app.add_subcommand("theta", "Clusters of a poset twisted by a rotation");
    theta->add_option("POSET", poset)->required();
    theta->add_option("--theta", theta_text, "Rotation in turns, e.g. 1/8")->required();
    theta->add_flag("--count", count);
    theta->add_flag("--maximal", maximal, "Extend the seed to maximal compatible sets");
    theta->add_option("--seed", seed_path, "Cluster file for --maximal");

    auto* embed = app.add_subcommand("embed-j", "Check the spaced-out embedding C_id(Z_n) -> C_phi(Z_2n)");
    embed->add_option("--n", n)->required();

    auto* tri = app.add_subcommand("triangulation-check", "Decide the triangulation condition");
    tri->add_option("CLUSTER", cluster_path, "Symbolic cluster file or preset")->required();

    auto* cactus = app.add_subcommand("cactus", "Cactus decomposition of a cluster or a partition");
    cactus->add_option("CLUSTER", cluster_path);
    cactus->add_option("--rho", rho_path, "Partition file");

    auto* render = app.add_subcommand("render", "Draw a cluster as SVG");
    render->add_option("CLUSTER", cluster_path)->required();
    render->add_option("--out", svg_out)->required();

    auto* serve = app.add_subcommand("serve", "Run the JSON service");
    serve->add_option("--port", port);
    serve->add_option("--host", host);
    serve->add_option("--state-dir", state_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    bool as_json = format == "json";

    try {
        api::Result res;
        if (*validate) {
            res = api::validate_cocycle({{"poset", poset_arg(file)}});
        } else if (*covering) {
            res = api::covering({{"poset", poset_arg(file)}});
        } else if (*pco) {
            res = api::pco({{"poset", poset_arg(file)}, {"r", r}});
        } else if (*search) {
            json delta;
            if (file == "lin" || file == "lin0") {
                if (m <= 0)
                    throw CycloError("ParseError", "--m is required with " + file);
                delta = json{{file == "lin" ? "lin" : "lin_isolated_zero", m}};
            } else {
                delta = load_json_file(file);
            }
            json req{{"delta", delta}, {"rmax", rmax}, {"cap", cap}, {"budget", budget}};
            if (m > 0)
                req["m"] = m;
            res = api::search_pco(req);
        } else if (*clusters) {
            res = api::clusters({{"poset", poset_arg(poset)}, {"list", list}});
            if (!as_json) {
                if (list)
                    for (const auto& c : res.body["clusters"])
                        std::cout << c["hash"].get<std::string>() << " " << c["arcs"].dump() << "\n";
                else
                    std::cout << res.body["count"] << "\n";
                return 0;
            }
        } else if (*mutate) {
            res = api::mutate({{"cluster", cluster_arg(cluster_path)}, {"arc", arc}});
        } else if (*exch) {
            json req{{"poset", poset_arg(poset)}, {"budget", budget}};
            if (!seed_path.empty())
                req["seed"] = load_json_file(seed_path);
            res = api::exchange_graph(req);
            if (!dot_out.empty())
                write_file(dot_out, res.body["dot"].get<std::string>());
        } else if (*hom) {
            res = api::homdim({{"poset", poset_arg(poset)}, {"from", from}, {"to", to}, {"ext", ext}});
            if (!as_json) {
                std::cout << res.body["hom_dim"] << "\n";
                if (ext)
                    std::cout << res.body["ext1_dim"] << "\n";
                return 0;
            }
        } else if (*theta) {
            json req{{"poset", poset_arg(poset)}, {"theta", theta_text}, {"maximal", maximal}};
            if (!seed_path.empty())
                req["seed"] = load_json_file(seed_path);
            res = api::theta(req);
            if (!as_json && count) {
                std::cout << res.body["clusters"] << "\n";
                return 0;
            }
        } else if (*embed) {
            res = api::embed_j({{"n", n}});
        } else if (*tri) {
            res = api::triangulation_check({{"cluster", cluster_arg(cluster_path)}});
        } else if (*cactus) {
            if (rho_path.empty() == cluster_path.empty())
                throw CLI::ValidationError("cactus", "give exactly one of CLUSTER or --rho");
            if (!rho_path.empty())
                res = api::cactus({{"rho", load_json_file(rho_path)}});
            else
                res = api::cactus({{"cluster", cluster_arg(cluster_path)}});
        } else if (*render) {
            res = api::render({{"cluster", cluster_arg(cluster_path)}});
            write_file(svg_out, res.body["svg"].get<std::string>());
        } else if (*serve) {
            std::optional<std::filesystem::path> dir;
            if (!state_dir.empty())
                dir = state_dir;
            return cycloset::serve(host, port, dir);
        }

        if (as_json)
            std::cout << res.body.dump(2) << "\n";
        else
            print_fields(res.body, {"svg", "dot"});
        return res.ok ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CycloError& e) {
        if (as_json)
            std::cout << api::error_body(e.code(), e.what()).dump(2) << "\n";
        else
            std::cerr << e.code() << ": " << e.what() << "\n";
        return e.code() == "ParseError" ? 2 : 1;
    } catch (const json::exception& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 2;
    }
}
