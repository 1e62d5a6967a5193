#include "cycloset/io.hpp"

#include <fstream>
#include <sstream>

namespace cycloset {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        out.push_back(part);
    return out;
}

long long to_ll(const std::string& s)
{
    try {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::logic_error&) {
    }
    throw CycloError("ParseError", "not an integer: '" + s + "'");
}

Rational rational_of(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw CycloError("ParseError", "rationals are written as \"p/q\" strings");
}

} // namespace

Automorphism automorphism_from_json(const json& j)
{
    if (j.is_null())
        return Automorphism::canonical();
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "id" || s == "identity")
            return Automorphism::identity();
        if (s == "canonical")
            return Automorphism::canonical();
        if (s.rfind("rot=", 0) == 0)
            return Automorphism::rotation(parse_rational(s.substr(4)));
        throw CycloError("ParseError", "unknown automorphism '" + s + "'");
    }
    if (j.is_object() && j.contains("rotation"))
        return Automorphism::rotation(rational_of(j.at("rotation")));
    throw CycloError("ParseError", "automorphism must be \"id\", \"canonical\" or {\"rotation\":\"p/q\"}");
}

json automorphism_to_json(const Automorphism& a)
{
    switch (a.kind) {
    case AutoKind::Identity:
        return "id";
    case AutoKind::Canonical:
        return "canonical";
    case AutoKind::Rotation:
        return json{{"rotation", to_string(a.step)}};
    }
    return nullptr;
}

CyclicPoset poset_from_shorthand(const std::string& s)
{
    auto parts = split(s, ':');
    if (parts.size() < 2 || parts.size() > 3)
        throw CycloError("ParseError", "poset shorthand looks like zn:8, zn:5:id, zn:24:rot=1/8 or zz:2");
    Automorphism a = parts.size() == 3 ? automorphism_from_json(parts[2]) : Automorphism::canonical();
    long long n = to_ll(parts[1]);
    if (parts[0] == "zn")
        return CyclicPoset::zn(n, a);
    if (parts[0] == "zz")
        return CyclicPoset::zzinf((int)n, a);
    throw CycloError("ParseError", "unknown poset kind '" + parts[0] + "'");
}

CyclicPoset poset_from_json(const json& j)
{
    if (j.is_string())
        return poset_from_shorthand(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind"))
        throw CycloError("ParseError", "poset descriptor needs a \"kind\"");
    Automorphism a = automorphism_from_json(j.value("auto", json()));
    auto kind = j.at("kind").get<std::string>();
    if (kind == "zn")
        return CyclicPoset::zn(j.at("n").get<long long>(), a);
    if (kind == "angles") {
        std::vector<Rational> t;
        for (const auto& v : j.at("turns"))
            t.push_back(rational_of(v));
        return CyclicPoset::angles(t, a);
    }
    if (kind == "z_zinfty") {
        if (j.contains("turns")) {
            std::vector<Rational> t;
            for (const auto& v : j.at("turns"))
                t.push_back(rational_of(v));
            return CyclicPoset::zzinf_at(t);
        }
        return CyclicPoset::zzinf(j.at("limits").get<int>(), a);
    }
    if (kind == "table") {
        std::vector<std::string> labels;
        for (const auto& v : j.at("carrier"))
            labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        auto index = [&](const json& v) -> long long {
            if (v.is_number_integer())
                return v.get<long long>();
            auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
            if (it == labels.end())
                throw CycloError("ParseError", "unknown carrier label " + v.dump());
            return it - labels.begin();
        };
        std::map<std::array<long long, 3>, int> values;
        for (const auto& row : j.at("cocycle")) {
            if (!row.is_array() || row.size() != 4)
                throw CycloError("ParseError", "cocycle rows are [x,y,z,value]");
            values[{index(row[0]), index(row[1]), index(row[2])}] = row[3].get<int>();
        }
        if (!j.contains("auto"))
            a = Automorphism::identity();
        return CyclicPoset::table(labels, CocycleProvider::table(values), a);
    }
    throw CycloError("ParseError", "unknown poset kind '" + kind + "'");
}

json poset_to_json(const CyclicPoset& p)
{
    json j;
    switch (p.kind()) {
    case PosetKind::Zn:
        j["kind"] = "zn";
        j["n"] = p.size();
        break;
    case PosetKind::Angles: {
        j["kind"] = "angles";
        json t = json::array();
        for (const auto& x : p.carrier())
            t.push_back(to_string(x.turns));
        j["turns"] = t;
        break;
    }
    case PosetKind::ZZinf:
        j["kind"] = "z_zinfty";
        j["limits"] = p.limit_count();
        break;
    case PosetKind::Table: {
        j["kind"] = "table";
        j["carrier"] = p.labels();
        json rows = json::array();
        for (const auto& [k, v] : p.cocycle().table_values())
            rows.push_back({k[0], k[1], k[2], v});
        j["cocycle"] = rows;
        break;
    }
    }
    j["auto"] = automorphism_to_json(p.automorphism());
    return j;
}

CirclePoint parse_point(const CyclicPoset& p, const std::string& s)
{
    if (auto colon = s.find(':'); colon != std::string::npos) {
        if (p.finite())
            throw CycloError("ParseError", "symbolic point '" + s + "' on a finite poset");
        return p.point((int)to_ll(s.substr(0, colon)), to_ll(s.substr(colon + 1)));
    }
    if (p.finite() && p.kind() != PosetKind::Angles && s.find('/') == std::string::npos) {
        long long i = to_ll(s);
        if (i < 0 || i >= (long long)p.size())
            throw CycloError("ParseError", "point index " + s + " outside the carrier");
        return p.carrier()[i];
    }
    if (p.kind() == PosetKind::Angles) {
        auto x = CirclePoint::angle(parse_rational(s));
        if (!p.contains(x))
            throw CycloError("ParseError", "angle " + s + " is not in the carrier");
        return x;
    }
    throw CycloError("ParseError", "cannot read point '" + s + "'");
}

CirclePoint point_from_json(const CyclicPoset& p, const json& j)
{
    if (j.is_number_integer())
        return parse_point(p, std::to_string(j.get<long long>()));
    if (j.is_string())
        return parse_point(p, j.get<std::string>());
    if (j.is_object() && j.contains("limit") && j.contains("pos")) {
        if (p.finite())
            throw CycloError("ParseError", "symbolic point on a finite poset");
        return p.point(j.at("limit").get<int>(), j.at("pos").get<long long>());
    }
    throw CycloError("ParseError", "cannot read point " + j.dump());
}

json point_to_json(const CirclePoint& x)
{
    if (x.kind == CirclePoint::Kind::Orbit)
        return x.index;
    return x.label();
}

Arc parse_arc(const CyclicPoset& p, const std::string& s)
{
    auto parts = split(s, ',');
    if (parts.size() != 2)
        throw CycloError("ParseError", "arc must be written \"x,y\"");
    return Arc(parse_point(p, parts[0]), parse_point(p, parts[1]));
}

Arc arc_from_json(const CyclicPoset& p, const json& j)
{
    if (j.is_string())
        return parse_arc(p, j.get<std::string>());
    if (!j.is_array() || j.size() != 2)
        throw CycloError("ParseError", "arc must be [x,y]");
    return Arc(point_from_json(p, j[0]), point_from_json(p, j[1]));
}

json arc_to_json(const Arc& a)
{
    return json::array({point_to_json(a.x), point_to_json(a.y)});
}

json arcs_to_json(const std::vector<Arc>& arcs)
{
    json out = json::array();
    for (const auto& a : arcs)
        out.push_back(arc_to_json(a));
    return out;
}

ClusterFile cluster_file_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("poset"))
        throw CycloError("ParseError", "cluster file needs \"poset\" and \"arcs\"");
    ClusterFile f{poset_from_json(j.at("poset")), j.at("poset"), {}};
    for (const auto& a : j.value("arcs", json::array()))
        f.arcs.push_back(arc_from_json(f.poset, a));
    return f;
}

json cluster_to_json(const json& poset, const Cluster& c)
{
    return json{{"poset", poset}, {"arcs", arcs_to_json(c.arcs)}};
}

Tail tail_from_json(const json& j)
{
    Tail t;
    t.limit = j.at("limit").get<int>();
    auto d = j.at("dir").get<std::string>();
    if (d != "+" && d != "-")
        throw CycloError("ParseError", "tail direction is \"+\" or \"-\"");
    t.dir = d[0];
    t.start = j.value("start", 0LL);
    return t;
}

json tail_to_json(const Tail& t)
{
    return json{{"limit", t.limit}, {"dir", std::string(1, t.dir)}, {"start", t.start}};
}

FanFamily family_from_json(const CyclicPoset& p, const json& j)
{
    FanFamily f;
    if (j.contains("fixed"))
        f.fixed = point_from_json(p, j.at("fixed"));
    else if (j.contains("tail"))
        f.first = tail_from_json(j.at("tail"));
    else
        throw CycloError("ParseError", "family needs \"fixed\" or \"tail\"");
    const auto& m = j.at("moving");
    f.moving = tail_from_json(m.contains("tail") ? m.at("tail") : m);
    f.offset = j.value("offset", 0LL);
    return f;
}

json family_to_json(const FanFamily& f)
{
    json j;
    if (f.fixed)
        j["fixed"] = json{{"limit", f.fixed->limit}, {"pos", f.fixed->pos()}};
    else
        j["tail"] = tail_to_json(f.first);
    j["moving"] = json{{"tail", tail_to_json(f.moving)}};
    j["offset"] = f.offset;
    return j;
}

SymbolicCluster symbolic_from_json(const json& j)
{
    if (j.is_string()) {
        auto name = j.get<std::string>();
        if (name == "straight_zigzag")
            return straight_zigzag_cluster();
        if (name == "nested_two_limit")
            return nested_two_limit_cluster();
        if (name == "ten_limit_cactus")
            return ten_limit_cactus_cluster();
        throw CycloError("ParseError", "unknown cluster preset '" + name + "'");
    }
    if (!j.is_object() || !j.contains("poset"))
        throw CycloError("ParseError", "symbolic cluster needs \"poset\"");
    SymbolicCluster s;
    s.poset = poset_from_json(j.at("poset"));
    if (s.poset.finite())
        throw CycloError("ParseError", "symbolic clusters live on z_zinfty posets");
    for (const auto& a : j.value("arcs", json::array()))
        s.arcs.push_back(arc_from_json(s.poset, a));
    for (const auto& f : j.value("families", json::array()))
        s.families.push_back(family_from_json(s.poset, f));
    return canonicalize(std::move(s));
}

json symbolic_to_json(const SymbolicCluster& s)
{
    json fams = json::array();
    for (const auto& f : s.families)
        fams.push_back(family_to_json(f));
    return json{{"poset", poset_to_json(s.poset)}, {"arcs", arcs_to_json(s.arcs)}, {"families", fams}};
}

NoncrossingPartition rho_from_json(const json& j, CyclicPoset* zz)
{
    int L = j.at("limits").get<int>();
    auto p = CyclicPoset::zzinf(L);
    std::vector<CirclePoint> pts;
    for (int w = 0; w < L; ++w)
        pts.push_back(p.limit_point(w));
    std::vector<std::vector<int>> classes = j.value("classes", std::vector<std::vector<int>>{});
    for (const auto& c : classes)
        for (int w : c)
            if (w < 0 || w >= L)
                throw CycloError("ParseError", "limit index " + std::to_string(w) + " out of range");
    if (zz)
        *zz = p;
    return NoncrossingPartition::from_classes(pts, classes);
}

json cactus_report(const CactusDecomposition& d)
{
    json disks = json::array();
    for (const auto& k : d.disks)
        disks.push_back(json{{"intervals", k.intervals}, {"marked", k.marked}, {"pinch_points", k.pinch_points}});
    json tree = json::array();
    for (auto [a, b] : d.tree)
        tree.push_back({a, b});
    return json{{"classes", d.rho.classes()}, {"disks", disks}, {"tree", tree}};
}

json object_to_json(const ClusterObject& o)
{
    return json{{"arc", arc_to_json(o.arc())}, {"p", o.p}, {"q", o.q}, {"status", to_string(o.status)}};
}

json morphism_dump(const MorphismSpace& m)
{
    auto entry = [](int e) {
        json coeffs = json::array();
        for (int i = 0; i <= e; ++i)
            coeffs.push_back(i == e ? 1 : 0);
        return coeffs;
    };
    json basis = json::array();
    for (const auto& g : m.basis) {
        json mat = json::array();
        for (int s = 0; s < 2; ++s)
            mat.push_back(json::array({entry(g.exp[s][0]), entry(g.exp[s][1])}));
        basis.push_back(mat);
    }
    return json{{"source", object_to_json(m.source)},
                {"target", object_to_json(m.target)},
                {"basis", basis},
                {"stable_dim", m.stable_dim}};
}

PartialCyclicOrder pco_from_json(const json& j)
{
    if (j.contains("lin"))
        return delta_lin(j.at("lin").get<int>());
    if (j.contains("lin_isolated_zero"))
        return delta_lin_isolated_zero(j.at("lin_isolated_zero").get<int>());
    PartialCyclicOrder d;
    d.size = j.at("m").get<int>();
    for (const auto& t : j.at("delta")) {
        Triple x{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
        for (int v : x)
            if (v < 0 || v >= d.size)
                throw CycloError("ParseError", "triple entry out of range");
        d.delta.insert(x);
    }
    return d;
}

json pco_to_json(const PartialCyclicOrder& d)
{
    json t = json::array();
    for (const auto& x : d.delta)
        t.push_back({x[0], x[1], x[2]});
    return json{{"m", d.size}, {"delta", t}};
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CycloError("ParseError", "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CycloError("ParseError", path + ": " + e.what());
    }
}

} // namespace cycloset
