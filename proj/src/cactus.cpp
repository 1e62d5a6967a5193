#include "cycloset/cactus.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace cycloset {

NoncrossingCheck is_noncrossing_partition(const NoncrossingPartition& rho)
{
    int n = (int)rho.points.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (rho.same(a, c) && rho.same(b, d) && !rho.same(a, b))
                        return {false, {a, b, c, d}};
    return {};
}

std::vector<std::vector<int>> enumerate_noncrossing_partitions(int n)
{
    using Blocks = std::vector<std::vector<int>>;
    std::function<std::vector<Blocks>(const std::vector<int>&)> go = [&](const std::vector<int>& elems) {
        std::vector<Blocks> out;
        if (elems.empty()) {
            out.push_back({});
            return out;
        }
        size_t rest = elems.size() - 1;
        for (unsigned mask = 0; mask < (1u << rest); ++mask) {
            std::vector<int> block{elems[0]};
            std::vector<std::vector<int>> gaps(1);
            for (size_t i = 0; i < rest; ++i) {
                if (mask >> i & 1) {
                    block.push_back(elems[i + 1]);
                    gaps.emplace_back();
                } else {
                    gaps.back().push_back(elems[i + 1]);
                }
            }
            std::vector<Blocks> acc{{block}};
            for (const auto& g : gaps) {
                auto sub = go(g);
                std::vector<Blocks> next;
                for (const auto& a : acc)
                    for (const auto& s : sub) {
                        Blocks b = a;
                        b.insert(b.end(), s.begin(), s.end());
                        next.push_back(std::move(b));
                    }
                acc = std::move(next);
            }
            out.insert(out.end(), acc.begin(), acc.end());
        }
        return out;
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> result;
    for (auto& blocks : go(all)) {
        std::sort(blocks.begin(), blocks.end());
        std::vector<int> ids(n);
        for (size_t k = 0; k < blocks.size(); ++k)
            for (int i : blocks[k])
                ids[i] = (int)k;
        result.push_back(std::move(ids));
    }
    std::sort(result.begin(), result.end());
    return result;
}

NoncrossingPartition partition_from_ids(std::vector<CirclePoint> pts, const std::vector<int>& ids)
{
    std::map<int, std::vector<int>> byc;
    for (size_t i = 0; i < ids.size(); ++i)
        byc[ids[i]].push_back((int)i);
    std::vector<std::vector<int>> classes;
    for (auto& [_, v] : byc)
        classes.push_back(v);
    return NoncrossingPartition::from_classes(std::move(pts), classes);
}

CyclicPoset cactus_poset(const CyclicPoset& zz, const NoncrossingPartition& rho)
{
    auto chk = is_noncrossing_partition(rho);
    if (!chk.ok)
        throw CycloError("CrossingPartition", "classes of points " + std::to_string(chk.witness[0]) + "," +
                                                  std::to_string(chk.witness[2]) + " and " +
                                                  std::to_string(chk.witness[1]) + "," +
                                                  std::to_string(chk.witness[3]) + " cross");
    return zz.with_cocycle(CocycleProvider::cactus(zz.cocycle(), rho));
}

namespace {

std::vector<CirclePoint> interval_representatives(const NoncrossingPartition& rho)
{
    const auto& pts = rho.points;
    std::vector<CirclePoint> reps;
    for (size_t j = 0; j < pts.size(); ++j) {
        Rational a = pts[j].turns;
        Rational b = j + 1 < pts.size() ? pts[j + 1].turns : pts[0].turns + Rational(1);
        reps.push_back(CirclePoint::angle(wrap_turns((a + b) / Rational(2))));
    }
    return reps;
}

} // namespace

std::vector<std::vector<int>> rho_classes(const NoncrossingPartition& rho)
{
    auto chk = is_noncrossing_partition(rho);
    if (!chk.ok)
        throw CycloError("CrossingPartition", "partition is not noncrossing");
    auto reps = interval_representatives(rho);
    int L = (int)reps.size();
    std::vector<int> cls(L, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < L; ++i) {
        if (cls[i] >= 0)
            continue;
        cls[i] = (int)out.size();
        out.push_back({i});
        for (int j = i + 1; j < L; ++j)
            if (cls[j] < 0 && rho_crossing(reps[i], reps[j], rho) == 0) {
                cls[j] = cls[i];
                out.back().push_back(j);
            }
    }
    return out;
}

int CactusDecomposition::disk_of_interval(int j) const
{
    for (size_t d = 0; d < disks.size(); ++d)
        if (std::binary_search(disks[d].intervals.begin(), disks[d].intervals.end(), j))
            return (int)d;
    throw CycloError("InvalidInterval", "interval " + std::to_string(j) + " is in no disk");
}

CactusDecomposition cactus_decompose(const NoncrossingPartition& rho)
{
    CactusDecomposition d;
    d.rho = rho;
    d.classes = rho_classes(rho);
    int L = (int)rho.points.size();
    std::map<int, int> class_size;
    for (int c : rho.cls)
        ++class_size[c];
    for (const auto& iv : d.classes) {
        CactusDisk disk;
        disk.intervals = iv;
        std::set<int> pinch;
        for (int j : iv) {
            disk.marked.push_back(rho.cls[j]);
            for (int l : {j, (j + 1) % L})
                if (class_size[rho.cls[l]] >= 2)
                    pinch.insert(rho.cls[l]);
        }
        disk.pinch_points.assign(pinch.begin(), pinch.end());
        d.disks.push_back(std::move(disk));
    }
    for (auto [c, size] : class_size) {
        if (size < 2)
            continue;
        std::vector<int> touching;
        for (size_t i = 0; i < d.disks.size(); ++i)
            if (std::binary_search(d.disks[i].pinch_points.begin(), d.disks[i].pinch_points.end(), c))
                touching.push_back((int)i);
        for (size_t k = 1; k < touching.size(); ++k)
            d.tree.push_back({touching[0], touching[k]});
    }
    std::sort(d.tree.begin(), d.tree.end());
    return d;
}

bool is_tree(size_t nodes, const std::vector<std::pair<int, int>>& edges)
{
    if (nodes == 0)
        return edges.empty();
    if (edges.size() != nodes - 1)
        return false;
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        parent[ra] = rb;
    }
    return true;
}

namespace {

// Point of disk d: interval j_r of the original poset becomes interval r.
CirclePoint pinch_point(const CyclicPoset& pinched, const CactusDisk& d, const CirclePoint& p)
{
    auto it = std::find(d.intervals.begin(), d.intervals.end(), p.limit);
    if (it == d.intervals.end())
        throw CycloError("CrossClassArc", "point " + p.label() + " is not on this disk");
    return pinched.point((int)(it - d.intervals.begin()), p.pos());
}

Tail pinch_tail(const CactusDisk& d, const Tail& t, int L)
{
    int m = (int)d.intervals.size();
    int iv = t.interval(L);
    int r = (int)(std::find(d.intervals.begin(), d.intervals.end(), iv) - d.intervals.begin());
    if (r == m)
        throw CycloError("CrossClassArc", "tail leaves its disk");
    if (t.dir == '+')
        return Tail{r, '+', t.start};
    return Tail{(r + 1) % m, '-', t.start};
}

Tail unpinch_tail(const CactusDisk& d, const Tail& t, int L)
{
    int m = (int)d.intervals.size();
    int r = t.interval(m);
    int j = d.intervals.at(r);
    if (t.dir == '+')
        return Tail{j, '+', t.start};
    return Tail{(j + 1) % L, '-', t.start};
}

} // namespace

ProductReport verify_product_decomposition(const CyclicPoset& zz, const NoncrossingPartition& rho, long long window,
                                           size_t samples, uint32_t seed)
{
    ProductReport r;
    auto dec = cactus_decompose(rho);
    FrobeniusEngine ec(cactus_poset(zz, rho));
    const auto& P = ec.poset();
    auto pts = zz.window(window);
    std::vector<int> klass(zz.limit_count());
    for (size_t k = 0; k < dec.classes.size(); ++k)
        for (int j : dec.classes[k])
            klass[j] = (int)k;

    std::vector<std::vector<ClusterObject>> objs(dec.classes.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            const auto &x = pts[i], &y = pts[j];
            bool same = klass[x.limit] == klass[y.limit];
            bool expect = same && y != P.successor(x) && x != P.successor(y);
            auto o = ec.object(x, y);
            ++r.objects_checked;
            if ((o.status == ObjectStatus::Nonzero) != expect)
                ++r.object_failures;
            if (!same && P.c(x, y, x) != 3)
                ++r.cross_c3_failures;
            if (o.status == ObjectStatus::Nonzero)
                objs[klass[x.limit]].push_back(o);
        }

    std::mt19937 rng(seed);
    auto pick = [&](const std::vector<ClusterObject>& v) { return v[rng() % v.size()]; };
    if (dec.classes.size() >= 2)
        for (size_t s = 0; s < samples; ++s) {
            size_t k1 = rng() % objs.size(), k2 = rng() % objs.size();
            if (k1 == k2)
                k2 = (k1 + 1) % objs.size();
            if (objs[k1].empty() || objs[k2].empty())
                continue;
            auto a = pick(objs[k1]), b = pick(objs[k2]);
            ++r.cross_pairs;
            if (ec.stable_hom_dim(a, b) != 0 || ec.stable_hom_dim(b, a) != 0)
                ++r.cross_failures;
        }

    std::deque<FrobeniusEngine> plain;
    for (const auto& d : dec.disks)
        plain.emplace_back(CyclicPoset::zzinf((int)d.intervals.size()));
    for (size_t s = 0; s < samples; ++s) {
        size_t k = rng() % objs.size();
        if (objs[k].empty())
            continue;
        auto a = pick(objs[k]), b = pick(objs[k]);
        const auto& pe = plain[k];
        const auto& disk = dec.disks[k];
        auto pa = pe.object(pinch_point(pe.poset(), disk, a.x), pinch_point(pe.poset(), disk, a.y));
        auto pb = pe.object(pinch_point(pe.poset(), disk, b.x), pinch_point(pe.poset(), disk, b.y));
        ++r.within_pairs;
        if (ec.stable_hom_dim(a, b) != pe.stable_hom_dim(pa, pb))
            ++r.within_failures;
    }
    return r;
}

std::vector<DiskCluster> cluster_correspondence(const SymbolicCluster& s)
{
    auto rho = rho_from_cluster(s);
    auto dec = cactus_decompose(rho);
    int L = s.poset.limit_count();
    std::vector<DiskCluster> out;
    for (size_t k = 0; k < dec.disks.size(); ++k) {
        DiskCluster dc;
        dc.disk = k;
        dc.cluster.poset = CyclicPoset::zzinf((int)dec.disks[k].intervals.size());
        out.push_back(std::move(dc));
    }
    for (const auto& a : s.arcs) {
        int k = dec.disk_of_interval(a.x.limit);
        auto& c = out[k].cluster;
        c.arcs.emplace_back(pinch_point(c.poset, dec.disks[k], a.x), pinch_point(c.poset, dec.disks[k], a.y));
    }
    for (const auto& f : s.families) {
        int k = dec.disk_of_interval(f.moving.interval(L));
        FanFamily g;
        g.first = pinch_tail(dec.disks[k], f.first, L);
        g.moving = pinch_tail(dec.disks[k], f.moving, L);
        g.offset = f.offset;
        out[k].cluster.families.push_back(g);
    }
    for (auto& dc : out)
        dc.cluster = canonicalize(std::move(dc.cluster));
    return out;
}

SymbolicCluster assemble(const CyclicPoset& zz, const CactusDecomposition& d, const std::vector<DiskCluster>& parts)
{
    SymbolicCluster s;
    s.poset = zz;
    int L = zz.limit_count();
    for (const auto& part : parts) {
        const auto& disk = d.disks.at(part.disk);
        for (const auto& a : part.cluster.arcs)
            s.arcs.emplace_back(zz.point(disk.intervals.at(a.x.limit), a.x.pos()),
                                zz.point(disk.intervals.at(a.y.limit), a.y.pos()));
        for (const auto& f : part.cluster.families) {
            if (f.fixed)
                throw CycloError("NotLocallyFinite", "per-disk cluster has a fixed fan point");
            FanFamily g;
            g.first = unpinch_tail(disk, f.first, L);
            g.moving = unpinch_tail(disk, f.moving, L);
            g.offset = f.offset;
            s.families.push_back(g);
        }
    }
    return canonicalize(std::move(s));
}

SymbolicCluster ten_limit_cactus_cluster()
{
    auto zz = CyclicPoset::zzinf(10);
    std::vector<CirclePoint> limits;
    for (int j = 0; j < 10; ++j)
        limits.push_back(zz.limit_point(j));
    auto rho = NoncrossingPartition::from_classes(limits, {{0, 3, 6}, {1, 2}, {4, 5}, {7, 9}, {8}});
    auto dec = cactus_decompose(rho);
    std::vector<DiskCluster> parts;
    for (size_t k = 0; k < dec.disks.size(); ++k)
        parts.push_back({k, construct_triangulation_cluster(CyclicPoset::zzinf((int)dec.disks[k].intervals.size()))});
    return assemble(zz, dec, parts);
}

} // namespace cycloset
