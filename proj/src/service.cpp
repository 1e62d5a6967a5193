#include "cycloset/service.hpp"

#include <httplib.h>

#include <fstream>
#include <iostream>
#include <regex>

namespace cycloset {

namespace {

json ok_body(json body)
{
    json out{{"schema_version", api::kSchemaVersion}};
    for (auto& [k, v] : body.items())
        out[k] = std::move(v);
    return out;
}

json parse_body(const std::string& body)
{
    if (body.empty())
        return json::object();
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw CycloError("ParseError", e.what());
    }
}

} // namespace

std::string Session::hash() const
{
    return current ? current->hash_hex() : api::symbolic_hash(*symbolic);
}

json Session::cluster_json() const
{
    return current ? cluster_to_json(poset_json, *current) : symbolic_to_json(*symbolic);
}

std::string Session::svg() const
{
    return current ? api::render_cluster(poset, *current) : api::render_symbolic(*symbolic);
}

Service::Service(std::optional<std::filesystem::path> state_dir) : state_dir_(std::move(state_dir))
{
    if (state_dir_) {
        std::filesystem::create_directories(*state_dir_);
        restore();
    }
}

size_t Service::session_count() const
{
    std::shared_lock lock(sessions_mu_);
    return sessions_.size();
}

std::shared_ptr<Session> Service::find(const std::string& id) const
{
    std::shared_lock lock(sessions_mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end())
        throw CycloError("UnknownSession", "no session '" + id + "'");
    return it->second;
}

std::shared_ptr<Session> Service::open(const json& req, const std::string& id)
{
    auto s = std::make_shared<Session>();
    s->id = id;
    s->poset_json = req.at("poset");
    s->seed_json = req.value("seed", json());
    s->poset = poset_from_json(s->poset_json);
    if (!s->poset.finite()) {
        if (s->seed_json.is_null())
            s->symbolic_seed = construct_triangulation_cluster(s->poset);
        else
            s->symbolic_seed = symbolic_from_json(s->seed_json);
        if (s->symbolic_seed->poset.id() != s->poset.id())
            throw CycloError("ParseError", "seed cluster lives on a different poset");
        s->symbolic = s->symbolic_seed;
        return s;
    }
    auto e = api::engine_for(s->poset);
    if (s->seed_json.is_null()) {
        s->seed = api::default_seed(*e);
    } else {
        std::vector<Arc> arcs;
        const auto& sj = s->seed_json;
        for (const auto& a : sj.is_object() ? sj.at("arcs") : sj)
            arcs.push_back(arc_from_json(s->poset, a));
        s->seed = Cluster(std::move(arcs));
        auto chk = is_cluster(*e, s->seed->arcs);
        if (!chk.ok)
            throw CycloError("InvalidCluster", "seed is not a cluster: " + chk.defect);
    }
    s->current = s->seed;
    return s;
}

void Service::apply(Session& s, const Arc& arc, json* body)
{
    json b;
    if (s.current) {
        auto e = api::engine_for(s.poset);
        b = api::mutation_body(*e, s.poset_json, *s.current, arc);
        s.current = cycloset::mutate(*e, *s.current, arc);
    } else {
        b = api::symbolic_mutation_body(*s.symbolic, arc);
        s.symbolic = mutate_symbolic(*s.symbolic, arc);
    }
    s.history.push_back({arc, s.hash()});
    if (body)
        *body = std::move(b);
}

void Service::snapshot(const Session& s) const
{
    if (!state_dir_)
        return;
    json hist = json::array();
    for (const auto& h : s.history)
        hist.push_back(arc_to_json(h.arc));
    json j{{"id", s.id}, {"poset", s.poset_json}, {"seed", s.seed_json}, {"history", hist}};
    auto path = *state_dir_ / (s.id + ".json");
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

void Service::restore()
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*state_dir_))
        if (entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        try {
            json j = load_json_file(f.string());
            std::string id = j.at("id").get<std::string>();
            json req{{"poset", j.at("poset")}, {"seed", j.value("seed", json())}};
            auto s = open(req, id);
            for (const auto& a : j.at("history"))
                apply(*s, arc_from_json(s->poset, a), nullptr);
            sessions_[id] = s;
            if (id.size() > 1 && id[0] == 's')
                next_id_ = std::max(next_id_, std::stoll(id.substr(1)) + 1);
        } catch (const std::exception& e) {
            std::cerr << "skipping snapshot " << f << ": " << e.what() << "\n";
        }
    }
}

json Service::create(const json& req)
{
    std::string id;
    {
        std::unique_lock lock(sessions_mu_);
        id = "s" + std::to_string(next_id_++);
    }
    auto s = open(req, id);
    {
        std::unique_lock lock(sessions_mu_);
        sessions_[id] = s;
    }
    snapshot(*s);
    return ok_body(json{{"id", id}, {"cluster", s->cluster_json()}, {"hash", s->hash()}, {"svg", s->svg()}});
}

json Service::mutate(const std::string& id, const json& req)
{
    auto s = find(id);
    std::lock_guard lock(s->mu);
    json body;
    apply(*s, arc_from_json(s->poset, req.at("arc")), &body);
    snapshot(*s);
    return ok_body(std::move(body));
}

json Service::neighbors(const std::string& id)
{
    auto s = find(id);
    std::lock_guard lock(s->mu);
    json list = json::array();
    if (s->current) {
        auto e = api::engine_for(s->poset);
        for (const auto& a : mutable_arcs(s->poset, *s->current))
            list.push_back(api::mutation_body(*e, s->poset_json, *s->current, a));
    } else {
        std::vector<Arc> candidates = s->symbolic->arcs;
        for (const auto& f : s->symbolic->families)
            candidates.push_back(f.arc(s->poset, 0));
        std::sort(candidates.begin(), candidates.end());
        for (const auto& a : candidates) {
            try {
                list.push_back(api::symbolic_mutation_body(*s->symbolic, a));
            } catch (const CycloError&) {
            }
        }
    }
    return ok_body(json{{"id", id}, {"hash", s->hash()}, {"neighbors", list}});
}

json Service::history(const std::string& id)
{
    auto s = find(id);
    std::lock_guard lock(s->mu);
    json hist = json::array();
    for (const auto& h : s->history)
        hist.push_back(json{{"arc", arc_to_json(h.arc)}, {"hash", h.hash}});
    std::string seed_hash = s->seed ? s->seed->hash_hex() : api::symbolic_hash(*s->symbolic_seed);
    return ok_body(json{{"id", id}, {"seed_hash", seed_hash}, {"hash", s->hash()}, {"history", hist}});
}

Response Service::handle(const std::string& method, const std::string& path, const std::string& body)
{
    static const std::regex session_re("^/api/session/([A-Za-z0-9_-]+)/(mutate|neighbors|history)$");
    try {
        std::smatch m;
        if (method == "GET" && path == "/api/posets")
            return {200, api::posets().body};
        if (method == "POST" && path == "/api/session")
            return {200, create(parse_body(body))};
        if (std::regex_match(path, m, session_re)) {
            std::string id = m[1], op = m[2];
            if (op == "mutate" && method == "POST")
                return {200, mutate(id, parse_body(body))};
            if (op == "neighbors" && method == "GET")
                return {200, neighbors(id)};
            if (op == "history" && method == "GET")
                return {200, history(id)};
        }
        if (method == "POST") {
            using Fn = api::Result (*)(const json&);
            static const std::map<std::string, Fn> stateless{
                {"/api/homdim", api::homdim},
                {"/api/triangulation-check", api::triangulation_check},
                {"/api/cactus", api::cactus},
                {"/api/clusters", api::clusters},
                {"/api/mutate", api::mutate},
                {"/api/exchange-graph", api::exchange_graph},
                {"/api/theta", api::theta},
                {"/api/embed-j", api::embed_j},
                {"/api/render", api::render},
                {"/api/validate-cocycle", api::validate_cocycle},
                {"/api/covering", api::covering},
                {"/api/pco", api::pco},
                {"/api/search-pco", api::search_pco},
            };
            if (auto it = stateless.find(path); it != stateless.end())
                return {200, it->second(parse_body(body)).body};
        }
        return {404, api::error_body("NotFound", method + " " + path)};
    } catch (const CycloError& e) {
        return {api::http_status(e.code()), api::error_body(e.code(), e.what())};
    } catch (const json::exception& e) {
        return {400, api::error_body("ParseError", e.what())};
    } catch (const std::exception& e) {
        return {500, api::error_body("Internal", e.what())};
    }
}

void Service::install(httplib::Server& server)
{
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
        auto r = handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(2), "application/json");
    };
    server.Get(R"(/api/.*)", route);
    server.Post(R"(/api/.*)", route);
}

int serve(const std::string& host, int port, std::optional<std::filesystem::path> state_dir)
{
    if (!state_dir)
        if (const char* env = std::getenv("CYCLOSET_STATE_DIR"); env && *env)
            state_dir = env;
    Service service(state_dir);
    httplib::Server server;
    service.install(server);
    std::cerr << "listening on " << host << ":" << port << "\n";
    return server.listen(host, port) ? 0 : 1;
}

} // namespace cycloset
