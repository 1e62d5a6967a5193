#pragma once

#include "cycloset/cactus.hpp"
#include "cycloset/pco.hpp"

#include <json.hpp>

#include <string>

namespace cycloset {

using json = nlohmann::ordered_json;

// Poset descriptors: a JSON object or a shorthand such as "zn:8",
// "zn:5:id", "zn:24:rot=1/8", "zz:2".
CyclicPoset poset_from_json(const json& j);
CyclicPoset poset_from_shorthand(const std::string& s);
json poset_to_json(const CyclicPoset& p);

Automorphism automorphism_from_json(const json& j);
json automorphism_to_json(const Automorphism& a);

// Points: carrier index (int), angle "p/q", "w:n" or {"limit":w,"pos":n}.
CirclePoint point_from_json(const CyclicPoset& p, const json& j);
json point_to_json(const CirclePoint& x);
CirclePoint parse_point(const CyclicPoset& p, const std::string& s);

Arc arc_from_json(const CyclicPoset& p, const json& j);
json arc_to_json(const Arc& a);
// "x,y"
Arc parse_arc(const CyclicPoset& p, const std::string& s);

json arcs_to_json(const std::vector<Arc>& arcs);

struct ClusterFile {
    CyclicPoset poset;
    json poset_json;
    std::vector<Arc> arcs;
};

ClusterFile cluster_file_from_json(const json& j);
json cluster_to_json(const json& poset, const Cluster& c);

Tail tail_from_json(const json& j);
json tail_to_json(const Tail& t);
FanFamily family_from_json(const CyclicPoset& p, const json& j);
json family_to_json(const FanFamily& f);

// Symbolic cluster file, or one of the preset names "straight_zigzag",
// "nested_two_limit", "ten_limit_cactus".
SymbolicCluster symbolic_from_json(const json& j);
json symbolic_to_json(const SymbolicCluster& s);

// {"limits":L,"classes":[[...],...]} over Z_L(Z_inf)
NoncrossingPartition rho_from_json(const json& j, CyclicPoset* zz = nullptr);

json cactus_report(const CactusDecomposition& d);
json morphism_dump(const MorphismSpace& m);
json object_to_json(const ClusterObject& o);

// {"m":6,"delta":[[x,y,z],...]}, or {"lin":m} / {"lin_isolated_zero":m}
PartialCyclicOrder pco_from_json(const json& j);
json pco_to_json(const PartialCyclicOrder& d);

json load_json_file(const std::string& path);

} // namespace cycloset
