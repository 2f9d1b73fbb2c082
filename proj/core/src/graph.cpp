#include "mg/graph.hpp"

#include <algorithm>
#include <numeric>

namespace mg {
namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::string describe(const Violation& v) {
    switch (v.kind) {
        case Defect::Empty: return "Empty: graph has no vertices";
        case Defect::DuplicateId: return "DuplicateId(" + v.subject + ")";
        case Defect::UnknownVertex: return "UnknownVertex(" + v.subject + ")";
        case Defect::NonPositiveLength: return "NonPositiveLength(" + v.subject + ")";
        case Defect::NegativeQ: return "NegativeQ(" + v.subject + ")";
        case Defect::NonEffectiveK: return "NonEffectiveK(" + v.subject + ")";
        case Defect::NotConnected: return "NotConnected";
    }
    return "Unknown";
}

Rat Divisor::degree() const {
    Rat d = 0;
    for (const auto& [p, c] : terms) d += c;
    return d;
}

std::variant<Graph, std::vector<Violation>> Graph::validate(const GraphSpec& spec) {
    std::vector<Violation> bad;
    if (spec.vertices.empty()) {
        bad.push_back({Defect::Empty, ""});
        return bad;
    }
    Graph g;
    for (const auto& vs : spec.vertices) {
        if (g.vindex_.count(vs.id)) {
            bad.push_back({Defect::DuplicateId, vs.id});
            continue;
        }
        g.vindex_[vs.id] = static_cast<int>(g.vid_.size());
        g.vid_.push_back(vs.id);
        g.q_.push_back(vs.q);
        if (vs.q < 0) bad.push_back({Defect::NegativeQ, vs.id});
    }
    for (const auto& es : spec.edges) {
        if (g.eindex_.count(es.id)) {
            bad.push_back({Defect::DuplicateId, es.id});
            continue;
        }
        auto iu = g.vindex_.find(es.u), iv = g.vindex_.find(es.v);
        if (iu == g.vindex_.end()) bad.push_back({Defect::UnknownVertex, es.u});
        if (iv == g.vindex_.end()) bad.push_back({Defect::UnknownVertex, es.v});
        if (iu == g.vindex_.end() || iv == g.vindex_.end()) continue;
        if (es.length <= 0) bad.push_back({Defect::NonPositiveLength, es.id});
        g.eindex_[es.id] = static_cast<int>(g.eid_.size());
        g.eid_.push_back(es.id);
        g.eu_.push_back(iu->second);
        g.ev_.push_back(iv->second);
        g.len_.push_back(es.length);
    }
    if (!bad.empty()) return bad;

    UnionFind uf(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) uf.unite(g.eu_[e], g.ev_[e]);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (uf.find(v) != uf.find(0)) {
            bad.push_back({Defect::NotConnected, ""});
            break;
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.ord_K(v) < 0) bad.push_back({Defect::NonEffectiveK, g.vid_[v]});
    if (!bad.empty()) return bad;

    g.bridge_.assign(g.edge_count(), false);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        UnionFind u2(g.vertex_count());
        for (int f = 0; f < g.edge_count(); ++f)
            if (f != e) u2.unite(g.eu_[f], g.ev_[f]);
        g.bridge_[e] = u2.find(g.eu_[e]) != u2.find(g.ev_[e]);
    }
    return g;
}

Graph Graph::must(const GraphSpec& spec) {
    auto r = validate(spec);
    if (auto* g = std::get_if<Graph>(&r)) return std::move(*g);
    std::string msg = "invalid graph:";
    for (const auto& v : std::get<std::vector<Violation>>(r)) msg += " " + describe(v);
    throw DomainError(msg);
}

int Graph::vertex_index(const std::string& id) const {
    auto it = vindex_.find(id);
    return it == vindex_.end() ? -1 : it->second;
}

int Graph::edge_index(const std::string& id) const {
    auto it = eindex_.find(id);
    return it == eindex_.end() ? -1 : it->second;
}

int Graph::valence(int v) const {
    int n = 0;
    for (int e = 0; e < edge_count(); ++e) {
        if (eu_[e] == v) ++n;
        if (ev_[e] == v) ++n;
    }
    return n;
}

int Graph::genus() const {
    long long s = betti();
    for (long long qv : q_) s += qv;
    return static_cast<int>(s);
}

Rat Graph::total_length() const {
    Rat s = 0;
    for (const Rat& l : len_) s += l;
    return s;
}

Divisor Graph::canonical_divisor() const {
    Divisor d;
    for (int v = 0; v < vertex_count(); ++v)
        if (ord_K(v) != 0) d.terms.push_back({vertex_point(v), Rat(ord_K(v))});
    return d;
}

bool Graph::is_bridge(int e) const { return bridge_[e]; }

long long Graph::edge_type(int e) const {
    if (!is_bridge(e)) return 0;
    // genus of the side containing edge_u after deleting e
    UnionFind uf(vertex_count());
    for (int f = 0; f < edge_count(); ++f)
        if (f != e) uf.unite(eu_[f], ev_[f]);
    int root = uf.find(eu_[e]);
    long long qs = 0;
    int nv = 0, ne = 0;
    for (int v = 0; v < vertex_count(); ++v)
        if (uf.find(v) == root) {
            qs += q_[v];
            ++nv;
        }
    for (int f = 0; f < edge_count(); ++f)
        if (f != e && uf.find(eu_[f]) == root) ++ne;
    long long h = qs + (ne - nv + 1);
    return std::min(h, genus() - h);
}

std::map<long long, Rat> Graph::type_lengths() const {
    std::map<long long, Rat> m;
    for (int e = 0; e < edge_count(); ++e) m[edge_type(e)] += len_[e];
    return m;
}

GraphSpec Graph::spec() const {
    GraphSpec s;
    for (int v = 0; v < vertex_count(); ++v) s.vertices.push_back({vid_[v], q_[v]});
    for (int e = 0; e < edge_count(); ++e)
        s.edges.push_back({eid_[e], vid_[eu_[e]], vid_[ev_[e]], len_[e]});
    return s;
}

GraphPoint vertex_point(int v) {
    GraphPoint p;
    p.vertex = v;
    return p;
}

GraphPoint edge_point(const Graph& g, int e, const Rat& offset) {
    if (offset < 0 || offset > g.length(e)) throw DomainError("offset outside edge");
    if (offset == 0) return vertex_point(g.edge_u(e));
    if (offset == g.length(e)) return vertex_point(g.edge_v(e));
    GraphPoint p;
    p.edge = e;
    p.offset = offset;
    return p;
}

bool same_point(const Graph&, const GraphPoint& a, const GraphPoint& b) {
    if (a.is_vertex() != b.is_vertex()) return false;
    if (a.is_vertex()) return a.vertex == b.vertex;
    return a.edge == b.edge && a.offset == b.offset;
}

bool is_two_edge_connected(const Graph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_bridge(e)) return false;
    return g.vertex_count() == 1 || g.edge_count() > 0;
}

namespace {

// Groups non-bridge edges into 2-edge-connected blocks; returns one entry
// per block (list of edge indices), plus each bridge as its own entry,
// ordered by smallest member edge index.
std::vector<std::vector<int>> block_edges(const Graph& g) {
    UnionFind uf(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.is_bridge(e)) uf.unite(g.edge_u(e), g.edge_v(e));
    std::map<int, std::vector<int>> blocks;
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.is_bridge(e))
            out.push_back({e});
        else
            blocks[uf.find(g.edge_u(e))].push_back(e);
    }
    for (auto& [root, es] : blocks) out.push_back(std::move(es));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

bool is_elementary(const Graph& g) {
    for (const auto& es : block_edges(g)) {
        if (es.size() == 1 && g.is_bridge(es[0])) continue;
        std::vector<int> vs;
        for (int e : es) {
            vs.push_back(g.edge_u(e));
            vs.push_back(g.edge_v(e));
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        long long b = static_cast<long long>(es.size()) - static_cast<long long>(vs.size()) + 1;
        if (b != 1) return false;
    }
    return true;
}

std::vector<Component> decompose_pointed_sum(const Graph& g) {
    auto groups = block_edges(g);
    std::vector<Component> out;
    for (const auto& es : groups) {
        // vertices of this component
        std::vector<int> vs;
        for (int e : es) {
            vs.push_back(g.edge_u(e));
            vs.push_back(g.edge_v(e));
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

        // fiber genus at each component vertex: drop this component's edges,
        // take the connected piece through the vertex, and count q + loops
        std::vector<bool> mine(g.edge_count(), false);
        for (int e : es) mine[e] = true;
        UnionFind uf(g.vertex_count());
        for (int e = 0; e < g.edge_count(); ++e)
            if (!mine[e]) uf.unite(g.edge_u(e), g.edge_v(e));

        GraphSpec spec;
        for (int v : vs) {
            int root = uf.find(v);
            long long qs = 0;
            int nv = 0, ne = 0;
            for (int w = 0; w < g.vertex_count(); ++w)
                if (uf.find(w) == root) {
                    qs += g.q(w);
                    ++nv;
                }
            for (int e = 0; e < g.edge_count(); ++e)
                if (!mine[e] && uf.find(g.edge_u(e)) == root) ++ne;
            spec.vertices.push_back({g.vertex_id(v), qs + (ne - nv + 1)});
        }
        for (int e : es)
            spec.edges.push_back({g.edge_id(e), g.vertex_id(g.edge_u(e)),
                                  g.vertex_id(g.edge_v(e)), g.length(e)});
        Component c{Graph::must(spec), {}, {}};
        for (int v : vs) c.vertex_map.push_back(v);
        for (int e : es) c.edge_map.push_back(e);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace mg
