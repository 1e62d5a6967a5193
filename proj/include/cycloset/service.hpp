#pragma once

#include "cycloset/api.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace httplib {
class Server;
}

namespace cycloset {

struct HistoryEntry {
    Arc arc;
    std::string hash;
};

// A finite cluster, or a symbolic one on Z(Z_inf), being mutated by a client.
struct Session {
    std::string id;
    json poset_json;
    json seed_json;
    CyclicPoset poset;
    std::optional<Cluster> seed, current;
    std::optional<SymbolicCluster> symbolic_seed, symbolic;
    std::vector<HistoryEntry> history;
    std::mutex mu;

    std::string hash() const;
    json cluster_json() const;
    std::string svg() const;
};

struct Response {
    int status = 200;
    json body;
};

class Service {
public:
    explicit Service(std::optional<std::filesystem::path> state_dir = std::nullopt);

    // Routes a request without a network round trip.
    Response handle(const std::string& method, const std::string& path, const std::string& body);

    void install(httplib::Server& server);
    size_t session_count() const;

private:
    std::optional<std::filesystem::path> state_dir_;
    mutable std::shared_mutex sessions_mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    long long next_id_ = 1;

    std::shared_ptr<Session> find(const std::string& id) const;
    std::shared_ptr<Session> open(const json& req, const std::string& id);
    void apply(Session& s, const Arc& arc, json* body);
    void snapshot(const Session& s) const;
    void restore();

    json create(const json& req);
    json mutate(const std::string& id, const json& req);
    json neighbors(const std::string& id);
    json history(const std::string& id);
};

// Serves until the process is stopped.
int serve(const std::string& host, int port, std::optional<std::filesystem::path> state_dir);

} // namespace cycloset
