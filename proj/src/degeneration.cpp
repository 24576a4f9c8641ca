#include "rank1lab/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rank1lab/errors.hpp"

namespace rank1lab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

PinchVerdict classify(const ConnectivityGraph& g) {
    int parts = static_cast<int>(g.vertices.size());
    int edges = static_cast<int>(g.edges.size());
    if (parts == 1 && edges == 1) return PinchVerdict::SingleLoop;
    if (parts == 2 && edges == 2) {
        for (const PartEdge& e : g.edges)
            if (e.from == e.to) return PinchVerdict::Infeasible;
        return PinchVerdict::DoubleEdge;
    }
    if (parts >= 3 && edges == parts) {
        // connected and 2-regular without loops on >= 3 vertices is one cycle
        std::vector<int> degree(static_cast<size_t>(parts), 0);
        UnionFind uf(parts);
        for (const PartEdge& e : g.edges) {
            if (e.from == e.to) return PinchVerdict::Infeasible;
            ++degree[static_cast<size_t>(e.from)];
            ++degree[static_cast<size_t>(e.to)];
            uf.unite(e.from, e.to);
        }
        for (int d : degree)
            if (d != 2) return PinchVerdict::Infeasible;
        for (int v = 1; v < parts; ++v)
            if (uf.find(v) != uf.find(0)) return PinchVerdict::Infeasible;
        return PinchVerdict::PartCycle;
    }
    return PinchVerdict::Infeasible;
}

} // namespace

std::string to_string(PinchVerdict v) {
    switch (v) {
    case PinchVerdict::SingleLoop: return "single_loop";
    case PinchVerdict::DoubleEdge: return "double_edge";
    case PinchVerdict::PartCycle: return "part_cycle";
    case PinchVerdict::Infeasible: return "infeasible";
    }
    throw InternalInconsistency("unknown pinch verdict");
}

DegenerateConfig pinch(const Origami& o, const CylinderDecomposition& d) {
    if (o.n != d.surface.n) throw InternalInconsistency("decomposition does not match surface");
    int k = static_cast<int>(d.cylinders.size());

    // Components of the boundary complex: each cylinder's top interface is
    // one circle; circles sharing a cone point merge into one part.
    UnionFind uf(k);
    std::vector<std::vector<int>> class_circles(d.class_order.size());
    for (const Cylinder& c : d.cylinders)
        for (int sq : c.top_squares)
            class_circles[static_cast<size_t>(d.corner_class[static_cast<size_t>(sq)])].push_back(
                c.index);
    for (const auto& circles : class_circles)
        for (size_t i = 1; i < circles.size(); ++i) uf.unite(circles[0], circles[i]);

    std::vector<int> part_of_circle(static_cast<size_t>(k), -1);
    DegenerateConfig cfg;
    cfg.q = d.q;
    cfg.p = d.p;
    for (int c = 0; c < k; ++c) {
        int root = uf.find(c);
        if (part_of_circle[static_cast<size_t>(root)] == -1) {
            Part part;
            part.index = static_cast<int>(cfg.graph.vertices.size());
            part_of_circle[static_cast<size_t>(root)] = part.index;
            cfg.graph.vertices.push_back(std::move(part));
        }
        part_of_circle[static_cast<size_t>(c)] = part_of_circle[static_cast<size_t>(root)];
    }

    // Zeros sit on the part their cone point belongs to.
    for (size_t cls = 0; cls < d.class_order.size(); ++cls) {
        if (d.class_order[cls] == 0) continue;
        if (class_circles[cls].empty())
            throw InternalInconsistency("singular cone point on no boundary circle");
        int part = part_of_circle[static_cast<size_t>(class_circles[cls][0])];
        cfg.graph.vertices[static_cast<size_t>(part)].zero_orders.push_back(d.class_order[cls]);
    }
    for (Part& part : cfg.graph.vertices)
        std::sort(part.zero_orders.begin(), part.zero_orders.end(), std::greater<int>());

    // One edge per cylinder, from the part under its bottom to the part over
    // its top; each end deposits one simple pole.
    for (const Cylinder& c : d.cylinders) {
        if (c.bottom_word.empty()) throw InternalInconsistency("cylinder with empty bottom word");
        auto circle_of = [&](int sc) {
            return d.saddle_connections[static_cast<size_t>(sc)].circle;
        };
        int from = part_of_circle[static_cast<size_t>(circle_of(c.bottom_word[0]))];
        for (int sc : c.bottom_word)
            if (part_of_circle[static_cast<size_t>(circle_of(sc))] != from)
                throw InternalInconsistency("cylinder bottom spans two parts");
        int to = part_of_circle[static_cast<size_t>(c.index)];
        cfg.graph.edges.push_back(PartEdge{from, to, c.index, true});
        cfg.graph.vertices[static_cast<size_t>(from)].poles += 1;
        cfg.graph.vertices[static_cast<size_t>(to)].poles += 1;
    }

    for (Part& part : cfg.graph.vertices) {
        long long s = std::accumulate(part.zero_orders.begin(), part.zero_orders.end(), 0LL) -
                      part.poles;
        part.genus = (s + 2) >= 0 && (s + 2) % 2 == 0 ? static_cast<int>((s + 2) / 2) : -1;
    }

    cfg.verdict = classify(cfg.graph);
    return cfg;
}

bool gp_is_cycle(const ConnectivityGraph& g) {
    int parts = static_cast<int>(g.vertices.size());
    std::vector<int> degree(static_cast<size_t>(parts), 0);
    UnionFind uf(parts);
    int pole_edges = 0;
    for (const PartEdge& e : g.edges) {
        if (!e.pole_pair) continue;
        ++pole_edges;
        ++degree[static_cast<size_t>(e.from)];
        ++degree[static_cast<size_t>(e.to)];
        uf.unite(e.from, e.to);
    }
    if (pole_edges == 0) return false;
    int root = -1;
    for (int v = 0; v < parts; ++v) {
        if (degree[static_cast<size_t>(v)] == 0) continue;
        if (degree[static_cast<size_t>(v)] != 2) return false;
        if (root == -1) root = uf.find(v);
        if (uf.find(v) != root) return false;
    }
    return true; // connected 2-regular subgraph carries exactly one cycle
}

int cycle_space_dim(const ConnectivityGraph& g) {
    int parts = static_cast<int>(g.vertices.size());
    UnionFind uf(parts);
    for (const PartEdge& e : g.edges) uf.unite(e.from, e.to);
    int components = 0;
    for (int v = 0; v < parts; ++v)
        if (uf.find(v) == v) ++components;
    return static_cast<int>(g.edges.size()) - parts + components;
}

bool part_feasibility(const Part& p) {
    long long s = std::accumulate(p.zero_orders.begin(), p.zero_orders.end(), 0LL) - p.poles;
    if ((s + 2) % 2 != 0 || s + 2 < 0) return false;
    if (p.poles == 2 && p.zero_orders.empty()) return false; // twice-punctured sphere
    return true;
}

static std::string part_detail(const Part& p) {
    std::ostringstream out;
    out << "part " << p.index << " with zero orders {";
    for (size_t i = 0; i < p.zero_orders.size(); ++i)
        out << (i ? "," : "") << p.zero_orders[i];
    out << "} and " << p.poles << " poles is not a surface";
    return out.str();
}

FilterReport rank1_filter(const Origami& o, const FilterOptions& opt) {
    if (genus(o) < 2) throw ConstraintViolated("rank-one filter needs genus >= 2");
    Orbit orb = orbit(o, opt.orbit_cap);
    return rank1_filter_on_orbit(orb, cusps(orb), opt);
}

FilterReport rank1_filter_on_orbit(const Orbit& orb, const std::vector<Cusp>& cs,
                                   const FilterOptions& opt) {
    if (orb.members.empty()) throw InternalInconsistency("empty orbit");
    const Origami& base = orb.members[0];
    if (genus(base) < 2) throw ConstraintViolated("rank-one filter needs genus >= 2");

    FilterReport rep;
    rep.origami = base;
    for (const Cusp& c : cs) {
        CylinderDecomposition d = direction_decomposition(base, c.q, c.p);
        ++rep.directions_checked;
        if (opt.check_config) {
            ConfigReport cr = configuration_check(d);
            if (!cr.pass) {
                std::string detail = !cr.equal_circumference
                                         ? "cylinders have unequal circumferences"
                                     : !cr.chain_is_single_cycle
                                         ? "cylinder chain is not a single cycle"
                                         : "odd total zero order on a cylinder boundary";
                rep.failures.push_back(FilterFailure{c.q, c.p, "config", std::move(detail)});
                break;
            }
        }
        if (opt.check_pinch) {
            DegenerateConfig cfg = pinch(base, d);
            if (cfg.verdict == PinchVerdict::Infeasible) {
                std::ostringstream detail;
                detail << "pinch leaves " << cfg.graph.vertices.size() << " parts and "
                       << cfg.graph.edges.size() << " pole pairs in no admissible shape";
                rep.failures.push_back(FilterFailure{c.q, c.p, "pinch", detail.str()});
                break;
            }
            bool bad_part = false;
            for (const Part& part : cfg.graph.vertices) {
                if (part_feasibility(part)) continue;
                rep.failures.push_back(FilterFailure{c.q, c.p, "parts", part_detail(part)});
                bad_part = true;
                break;
            }
            if (bad_part) break;
        }
    }
    rep.pass = rep.failures.empty();
    return rep;
}

} // namespace rank1lab
