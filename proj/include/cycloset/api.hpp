#pragma once

#include "cycloset/io.hpp"
#include "cycloset/svg.hpp"
#include "cycloset/theta.hpp"

#include <memory>

// JSON-in, JSON-out operations shared by the command line and the service.
namespace cycloset::api {

inline constexpr int kSchemaVersion = 1;

struct Result {
    json body;
    // false when the request was well formed but the answer is a failed check
    bool ok = true;
};

// HTTP status for a CycloError code: 400 parse, 409 flip refused, 422 otherwise.
int http_status(const std::string& code);
json error_body(const std::string& code, const std::string& message);

std::shared_ptr<const FrobeniusEngine> engine_for(const CyclicPoset& p, EngineOptions o = {});

// Fan triangulation from the first carrier point (orbit fan for rotations),
// plus frozen arcs when phi = id.
Cluster default_seed(const FrobeniusEngine& e);

// Highlight sets for a finite cluster.
std::string render_cluster(const CyclicPoset& p, const Cluster& c, const std::vector<Arc>& mutated = {});
std::string render_symbolic(const SymbolicCluster& s, const std::vector<Arc>& mutated = {});
// Materialized window used for symbolic hashes and drawings.
inline constexpr long long kSymbolicWindow = 24;
std::string symbolic_hash(const SymbolicCluster& s);

// {cluster, hash, svg, exchange_partner, removed, middle_terms, ext_changes}
json mutation_body(const FrobeniusEngine& e, const json& poset, const Cluster& c, const Arc& arc);
json symbolic_mutation_body(const SymbolicCluster& s, const Arc& arc);

Result posets();
Result validate_cocycle(const json& req);
Result covering(const json& req);
Result pco(const json& req);
Result search_pco(const json& req);
Result clusters(const json& req);
Result mutate(const json& req);
Result exchange_graph(const json& req);
Result homdim(const json& req);
Result theta(const json& req);
Result embed_j(const json& req);
Result triangulation_check(const json& req);
Result cactus(const json& req);
Result render(const json& req);

} // namespace cycloset::api
