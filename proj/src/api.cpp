#include "cycloset/api.hpp"

#include <map>
#include <mutex>
#include <set>

namespace cycloset::api {

namespace {

json with_version(json body)
{
    json out{{"schema_version", kSchemaVersion}};
    for (auto& [k, v] : body.items())
        out[k] = std::move(v);
    return out;
}

Result done(json body, bool ok = true)
{
    return {with_version(std::move(body)), ok};
}

json labels(const std::vector<CirclePoint>& pts)
{
    json out = json::array();
    for (const auto& p : pts)
        out.push_back(point_to_json(p));
    return out;
}

EngineOptions options_from(const json& req)
{
    EngineOptions o;
    o.prime = req.value("prime", 2u);
    o.truncation = req.value("truncation", 6);
    o.all_projectives = req.value("all_projectives", false);
    return o;
}

Cluster seed_from(const FrobeniusEngine& e, const json& req)
{
    if (!req.contains("seed") || req.at("seed").is_null())
        return default_seed(e);
    const auto& s = req.at("seed");
    std::vector<Arc> arcs;
    for (const auto& a : s.is_object() ? s.at("arcs") : s)
        arcs.push_back(arc_from_json(e.poset(), a));
    return Cluster(std::move(arcs));
}

std::vector<Arc> cluster_edges(const SymbolicCluster& s, long long w)
{
    return s.materialize(w);
}

} // namespace

int http_status(const std::string& code)
{
    if (code == "ParseError")
        return 400;
    if (code == "UnknownSession")
        return 404;
    if (code == "FrozenArc" || code == "NotInCluster" || code == "MutationInsideTail")
        return 409;
    return 422;
}

json error_body(const std::string& code, const std::string& message)
{
    return json{{"schema_version", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
}

std::shared_ptr<const FrobeniusEngine> engine_for(const CyclicPoset& p, EngineOptions o)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const FrobeniusEngine>> cache;
    std::string key = p.id() + "|" + std::to_string(o.prime) + "|" + std::to_string(o.truncation) + "|" +
                      (o.all_projectives ? "all" : "local");
    std::lock_guard lock(mu);
    auto& slot = cache[key];
    if (!slot)
        slot = std::make_shared<const FrobeniusEngine>(p, o);
    return slot;
}

Cluster default_seed(const FrobeniusEngine& e)
{
    const auto& P = e.poset();
    if (!P.finite())
        throw CycloError("Unsupported", "finite clusters need a finite carrier");
    if (P.automorphism().kind == AutoKind::Rotation) {
        auto d = rotation_admissible(P.automorphism().step);
        if (!d.cluster_structure)
            throw CycloError("NoClusterStructure", d.reason);
        std::vector<std::pair<int, int>> fan;
        for (int i = 2; i + 1 < d.N; ++i)
            fan.push_back({0, i});
        return orbit_cluster(P, P.carrier()[0], fan);
    }
    if (P.kind() == PosetKind::Table)
        return enumerate_clusters(e).front();
    const auto& v = P.carrier();
    if (v.size() < 4)
        throw CycloError("TooSmall", "clusters need at least four points");
    std::vector<Arc> arcs;
    for (size_t i = 2; i + 1 < v.size(); ++i)
        arcs.emplace_back(v[0], v[i]);
    if (P.automorphism().kind == AutoKind::Identity)
        for (const auto& a : frozen_arcs(P))
            arcs.push_back(a);
    return Cluster(std::move(arcs));
}

std::string render_cluster(const CyclicPoset& p, const Cluster& c, const std::vector<Arc>& mutated)
{
    Highlights h;
    for (const auto& a : c.arcs)
        if (is_frozen(p, a))
            h.frozen.push_back(a);
    h.mutated = mutated;
    return render_diagram(p, c.arcs, h);
}

std::string render_symbolic(const SymbolicCluster& s, const std::vector<Arc>& mutated)
{
    Highlights h;
    auto arcs = cluster_edges(s, kSymbolicWindow);
    for (const auto& a : arcs)
        for (const auto& f : s.families)
            if (f.index_of(s.poset, a)) {
                h.family.push_back(a);
                break;
            }
    h.mutated = mutated;
    return render_diagram(s.poset, arcs, h);
}

std::string symbolic_hash(const SymbolicCluster& s)
{
    return Cluster(s.materialize(kSymbolicWindow)).hash_hex();
}

json mutation_body(const FrobeniusEngine& e, const json& poset, const Cluster& c, const Arc& arc)
{
    auto m = mutation_triangle(e, c, arc);
    auto old_obj = e.object(m.removed), new_obj = e.object(m.added);
    return json{{"cluster", cluster_to_json(poset, m.cluster)},
                {"hash", m.cluster.hash_hex()},
                {"removed", arc_to_json(m.removed)},
                {"exchange_partner", arc_to_json(m.added)},
                {"middle_terms", json::array({arc_to_json(m.middle_left), arc_to_json(m.middle_right)})},
                {"ext_changes",
                 {{"removed_to_added", e.ext1_dim(old_obj, new_obj)},
                  {"added_to_removed", e.ext1_dim(new_obj, old_obj)}}},
                {"svg", render_cluster(e.poset(), m.cluster, {m.added})}};
}

json symbolic_mutation_body(const SymbolicCluster& s, const Arc& arc)
{
    auto next = mutate_symbolic(s, arc);
    long long w = std::max(s.natural_window(), next.natural_window()) + 2;
    auto before = s.materialize(w), after = next.materialize(w);
    std::vector<Arc> added;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(added));
    json partner = added.empty() ? json(nullptr) : arc_to_json(added.front());
    json ext = nullptr;
    if (!added.empty()) {
        auto e = engine_for(s.poset);
        auto a = e->object(arc), b = e->object(added.front());
        ext = json{{"removed_to_added", e->ext1_dim(a, b)}, {"added_to_removed", e->ext1_dim(b, a)}};
    }
    return json{{"cluster", symbolic_to_json(next)},
                {"hash", symbolic_hash(next)},
                {"removed", arc_to_json(arc)},
                {"exchange_partner", partner},
                {"ext_changes", ext},
                {"svg", render_symbolic(next, added)}};
}

Result posets()
{
    json list = json::array();
    auto add = [&](const std::string& id, const std::string& description, json presets = json::array()) {
        list.push_back(json{{"id", id}, {"description", description}, {"presets", presets}});
    };
    for (int n = 4; n <= 9; ++n)
        add("zn:" + std::to_string(n), "Z_" + std::to_string(n) + " with the canonical automorphism");
    add("zn:5:id", "Z_5 with the identity automorphism");
    add("zn:6:id", "Z_6 with the identity automorphism");
    add("zn:24:rot=1/8", "Z_24 twisted by rotation through 1/8 turn");
    add("zz:2", "Z_2(Z_inf), two limit points", json::array({"straight_zigzag", "nested_two_limit"}));
    add("zz:10", "Z_10(Z_inf), ten limit points", json::array({"ten_limit_cactus"}));
    return done(json{{"posets", list}});
}

Result validate_cocycle(const json& req)
{
    auto p = poset_from_json(req.at("poset"));
    auto pts = p.finite() ? p.carrier() : p.window(req.value("window", 1LL));
    auto rep = cycloset::validate_cocycle(p.cocycle(), pts);
    json v = json::array();
    for (const auto& x : rep.violations)
        v.push_back(json{{"axiom", x.axiom}, {"witness", labels(x.witness)}});
    return done(json{{"poset", p.id()}, {"points", pts.size()}, {"valid", rep.ok()}, {"violations", v}}, rep.ok());
}

Result covering(const json& req)
{
    auto p = poset_from_json(req.at("poset"));
    if (!p.finite())
        throw CycloError("Unsupported", "covering posets are built for finite carriers");
    auto cov = build_covering(p);
    auto rep = check_covering_axioms(cov, req.value("radius", 2LL));
    auto star = check_zposet_star(cov, req.value("star_radius", 1LL));
    std::string reason;
    bool adm = is_admissible_automorphism(p, &reason);
    bool ok = rep.ok() && star.ok;
    return done(json{{"poset", p.id()},
                     {"b", cov.b},
                     {"fibers", rep.fibers_ok},
                     {"sigma", rep.sigma_ok},
                     {"antisymmetric", rep.antisymmetric},
                     {"condition3", rep.condition3},
                     {"star_property", star.ok},
                     {"admissible_automorphism", adm},
                     {"automorphism_note", reason},
                     {"valid", ok}},
                ok);
}

Result pco(const json& req)
{
    auto p = poset_from_json(req.at("poset"));
    auto r = pco_from_bounded_cocycle(p, req.at("r").get<int>());
    bool ok = r.check.ok && r.identity_i && r.identity_ii;
    json w = json::array();
    for (const auto& t : r.check.witness)
        w.push_back({t[0], t[1], t[2]});
    return done(json{{"poset", p.id()},
                     {"order", pco_to_json(r.order)},
                     {"identity_i", r.identity_i},
                     {"identity_ii", r.identity_ii},
                     {"is_partial_cyclic_order", r.check.ok},
                     {"failed_axiom", r.check.axiom},
                     {"witness", w}},
                ok);
}

Result search_pco(const json& req)
{
    auto d = pco_from_json(req.at("delta"));
    if (req.contains("m") && req.at("m").get<int>() != d.size)
        throw CycloError("ParseError", "ground set size does not match the order");
    auto chk = is_partial_cyclic_order(d);
    auto r = search_bounded_cocycle(d, req.value("rmax", 3), req.value("cap", 3),
                                    req.value("budget", 50'000'000ULL));
    std::string status = r.status == SearchResult::Status::Found      ? "Found"
                         : r.status == SearchResult::Status::Timeout ? "Timeout"
                                                                     : "Infeasible";
    json body{{"m", d.size},
              {"is_partial_cyclic_order", chk.ok},
              {"status", status},
              {"explored", r.explored},
              {"rejected_r", r.rejected_r}};
    if (r.status == SearchResult::Status::Found) {
        body["r"] = r.r;
        body["g"] = r.g;
    }
    return done(body);
}

Result clusters(const json& req)
{
    auto p = poset_from_json(req.at("poset"));
    auto e = engine_for(p);
    auto all = enumerate_clusters(*e);
    json body{{"poset", p.id()}, {"count", all.size()}};
    if (req.value("list", false)) {
        json list = json::array();
        for (const auto& c : all)
            list.push_back(json{{"hash", c.hash_hex()}, {"arcs", arcs_to_json(c.arcs)}});
        body["clusters"] = list;
    }
    return done(body);
}

Result mutate(const json& req)
{
    const auto& cj = req.at("cluster");
    if (cj.is_string() || poset_from_json(cj.at("poset")).kind() == PosetKind::ZZinf) {
        auto s = symbolic_from_json(cj);
        return done(symbolic_mutation_body(s, arc_from_json(s.poset, req.at("arc"))));
    }
    auto f = cluster_file_from_json(cj);
    auto e = engine_for(f.poset);
    Cluster c(f.arcs);
    return done(mutation_body(*e, f.poset_json, c, arc_from_json(f.poset, req.at("arc"))));
}

Result exchange_graph(const json& req)
{
    auto p = poset_from_json(req.at("poset"));
    auto e = engine_for(p);
    Cluster seed = seed_from(*e, req);
    auto g = cycloset::exchange_graph(*e, seed, req.value("budget", 5000ULL));
    return done(json{{"poset", p.id()},
                     {"seed", seed.hash_hex()},
                     {"nodes", g.nodes.size()},
                     {"edges", g.edges.size()},
                     {"truncated", g.truncated},
                     {"dot", to_dot(g)}});
}

Result homdim(const json& req)
{
    auto p = poset_from_json(req.at("poset"));
    auto e = engine_for(p, options_from(req));
    auto a = e->object(arc_from_json(p, req.at("from")));
    auto b = e->object(arc_from_json(p, req.at("to")));
    json body{{"poset", p.id()}, {"from", object_to_json(a)}, {"to", object_to_json(b)}};
    body["hom_dim"] = e->stable_hom_dim(a, b);
    if (req.value("ext", false))
        body["ext1_dim"] = e->ext1_dim(a, b);
    if (a.status == ObjectStatus::Nonzero && b.status == ObjectStatus::Nonzero)
        body["morphisms"] = morphism_dump(e->hom_space(a, b));
    return done(body);
}

Result theta(const json& req)
{
    auto base = poset_from_json(req.at("poset"));
    Rational step = parse_rational(req.at("theta").get<std::string>());
    auto d = rotation_admissible(step);
    if (!d.cluster_structure)
        throw CycloError("NoClusterStructure", d.reason);
    auto p = base.with_automorphism(Automorphism::rotation(step));
    auto e = engine_for(p);
    auto all = enumerate_theta_clusters(*e);
    std::set<Cluster> unseen(all.begin(), all.end());
    std::vector<size_t> sizes;
    bool truncated = false;
    while (!unseen.empty()) {
        auto g = cycloset::exchange_graph(*e, *unseen.begin(), req.value("budget", 100000ULL));
        truncated = truncated || g.truncated;
        sizes.push_back(g.nodes.size());
        for (const auto& c : g.nodes)
            unseen.erase(c);
    }
    json body{{"poset", p.id()},
              {"N", d.N},
              {"orbits", orbit_representatives(p).size()},
              {"clusters", all.size()},
              {"components", sizes},
              {"truncated", truncated}};
    if (req.value("maximal", false)) {
        Cluster seed;
        if (req.contains("diagonals"))
            seed = orbit_cluster(p, p.carrier()[0], req.at("diagonals").get<std::vector<std::pair<int, int>>>());
        else
            seed = seed_from(*e, req);
        auto s = extend_to_maximal(*e, seed, req.value("clique_budget", 1000000ULL));
        body["maximal"] = json{{"seed", arcs_to_json(seed.arcs)},
                               {"seed_size", seed.arcs.size()},
                               {"largest", s.largest},
                               {"added", s.largest - seed.arcs.size()},
                               {"maximal_sets", s.maximal.size()},
                               {"truncated", s.truncated}};
    }
    return done(body);
}

Result embed_j(const json& req)
{
    int n = req.at("n").get<int>();
    auto r = verify_J(n, options_from(req));
    return done(json{{"n", r.n},
                     {"pairs_checked", r.pairs_checked},
                     {"hom_failures", r.hom_failures},
                     {"clusters_checked", r.clusters_checked},
                     {"cluster_failures", r.cluster_failures},
                     {"shift_intersection", r.shift_intersection},
                     {"valid", r.ok()}},
                r.ok());
}

Result triangulation_check(const json& req)
{
    auto s = symbolic_from_json(req.at("cluster"));
    json body{{"poset", s.poset.id()}};
    auto lf = is_locally_finite(s);
    body["locally_finite"] = lf.ok;
    if (!lf.ok) {
        body["witness"] = point_to_json(*lf.witness);
        body["triangulation"] = false;
        return done(body, false);
    }
    std::string reason;
    bool tri = is_triangulation_cluster(s, &reason);
    body["triangulation"] = tri;
    body["reason"] = reason;
    body["rho"] = rho_from_cluster(s).classes();
    json comps = json::array();
    for (auto [i, j] : infinite_components(s))
        comps.push_back("C_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    body["infinite_components"] = comps;
    return done(body, tri);
}

Result cactus(const json& req)
{
    if (req.contains("rho")) {
        auto rho = rho_from_json(req.at("rho"));
        auto chk = is_noncrossing_partition(rho);
        if (!chk.ok)
            throw CycloError("CrossingPartition", "classes cross at limits " + std::to_string(chk.witness[0]) + "," +
                                                      std::to_string(chk.witness[1]) + "," +
                                                      std::to_string(chk.witness[2]) + "," +
                                                      std::to_string(chk.witness[3]));
        return done(cactus_report(cactus_decompose(rho)));
    }
    auto s = symbolic_from_json(req.at("cluster"));
    auto dec = cactus_decompose(rho_from_cluster(s));
    auto parts = cluster_correspondence(s);
    json body = cactus_report(dec);
    json pj = json::array();
    bool all_tri = true;
    for (const auto& part : parts) {
        bool tri = is_triangulation_cluster(part.cluster);
        all_tri = all_tri && tri;
        pj.push_back(json{{"disk", part.disk}, {"triangulation", tri}, {"cluster", symbolic_to_json(part.cluster)}});
    }
    body["parts"] = pj;
    body["round_trip"] = assemble(s.poset, dec, parts) == s;
    return done(body, all_tri);
}

Result render(const json& req)
{
    const auto& cj = req.at("cluster");
    if (cj.is_string() || poset_from_json(cj.at("poset")).kind() == PosetKind::ZZinf) {
        auto s = symbolic_from_json(cj);
        return done(json{{"hash", symbolic_hash(s)}, {"svg", render_symbolic(s)}});
    }
    auto f = cluster_file_from_json(cj);
    Cluster c(f.arcs);
    return done(json{{"hash", c.hash_hex()}, {"svg", render_cluster(f.poset, c)}});
}

} // namespace cycloset::api
