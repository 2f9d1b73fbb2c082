#include "mg/resistance.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>

namespace mg {

const Rat& Poly::coeff(int i) const {
    static const Rat zero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& t) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

Rat Poly::integral(const Rat& a, const Rat& b) const {
    Rat va = 0, vb = 0;
    for (int i = degree(); i >= 0; --i) {
        va = va * a + c_[i] / (i + 1);
        vb = vb * b + c_[i] / (i + 1);
    }
    return vb * b - va * a;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Rat(-1); }

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= s;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long long>(i));
    return Poly(std::move(c));
}

BivarPoly BivarPoly::product(const Poly& p, const Poly& q) {
    BivarPoly b;
    if (p.degree() < 0 || q.degree() < 0) return b;
    b.c_.assign(p.degree() + 1, std::vector<Rat>(q.degree() + 1, Rat(0)));
    for (int i = 0; i <= p.degree(); ++i)
        for (int j = 0; j <= q.degree(); ++j) b.c_[i][j] = p.coeff(i) * q.coeff(j);
    return b;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly b;
    size_t n = std::max(c_.size(), o.c_.size());
    size_t m = 0;
    for (const auto& row : c_) m = std::max(m, row.size());
    for (const auto& row : o.c_) m = std::max(m, row.size());
    b.c_.assign(n, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) b.c_[i][j] += c_[i][j];
    for (size_t i = 0; i < o.c_.size(); ++i)
        for (size_t j = 0; j < o.c_[i].size(); ++j) b.c_[i][j] += o.c_[i][j];
    return b;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly neg = o;
    for (auto& row : neg.c_)
        for (auto& x : row) x = -x;
    return *this + neg;
}

Rat BivarPoly::eval(const Rat& t, const Rat& u) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat row = 0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * u + *jt;
        v = v * t + row;
    }
    return v;
}

BivarPoly BivarPoly::dt() const {
    BivarPoly b;
    if (c_.size() <= 1) return b;
    b.c_.assign(c_.size() - 1, {});
    for (size_t i = 1; i < c_.size(); ++i) {
        b.c_[i - 1] = c_[i];
        for (auto& x : b.c_[i - 1]) x *= Rat(static_cast<long long>(i));
    }
    return b;
}

BivarPoly BivarPoly::du() const {
    BivarPoly b;
    b.c_.assign(c_.size(), {});
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].size() <= 1) continue;
        b.c_[i].assign(c_[i].size() - 1, Rat(0));
        for (size_t j = 1; j < c_[i].size(); ++j)
            b.c_[i][j - 1] = c_[i][j] * Rat(static_cast<long long>(j));
    }
    return b;
}

Rat ResistanceProfile::eval(const Rat& t) const {
    for (const auto& pc : pieces)
        if (t >= pc.t0 && t <= pc.t1) return pc.p.eval(t);
    throw DomainError("profile evaluated outside edge");
}

Rat ResistanceProfile::integral() const {
    Rat s = 0;
    for (const auto& pc : pieces) s += pc.p.integral(pc.t0, pc.t1);
    return s;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<int> with(std::vector<int> v, int e) {
    v.push_back(e);
    return v;
}

// Electrical network assembled from the graph with some edges deleted and
// up to a few interior points realized as extra nodes.
struct Net {
    std::vector<std::tuple<int, int, Rat>> res;  // (a, b, resistance)
    int nodes = 0;
};

struct NetBuilder {
    const Graph& g;
    std::vector<int> deleted;
    std::vector<std::pair<int, Rat>> interior;  // (edge, offset) -> node V + idx

    bool is_deleted(int e) const {
        return std::find(deleted.begin(), deleted.end(), e) != deleted.end();
    }

    int node_of(const GraphPoint& p) {
        if (p.is_vertex()) return p.vertex;
        for (size_t i = 0; i < interior.size(); ++i)
            if (interior[i].first == p.edge && interior[i].second == p.offset)
                return g.vertex_count() + static_cast<int>(i);
        interior.push_back({p.edge, p.offset});
        return g.vertex_count() + static_cast<int>(interior.size()) - 1;
    }

    Net build() const {
        Net n;
        n.nodes = g.vertex_count() + static_cast<int>(interior.size());
        for (int e = 0; e < g.edge_count(); ++e) {
            if (is_deleted(e)) continue;
            std::vector<std::pair<Rat, int>> cuts;  // offset -> node
            for (size_t i = 0; i < interior.size(); ++i)
                if (interior[i].first == e)
                    cuts.push_back({interior[i].second, g.vertex_count() + static_cast<int>(i)});
            std::sort(cuts.begin(), cuts.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            int prev = g.edge_u(e);
            Rat at = 0;
            for (const auto& [off, node] : cuts) {
                n.res.push_back({prev, node, off - at});
                prev = node;
                at = off;
            }
            n.res.push_back({prev, g.edge_v(e), g.length(e) - at});
        }
        return n;
    }
};

// Effective resistance by exact Gaussian elimination on the grounded
// Laplacian of the connected component of s and t.
std::optional<Rat> net_resistance(const Net& net, int s, int t) {
    if (s == t) return Rat(0);
    UnionFind uf(net.nodes);
    for (const auto& [a, b, r] : net.res) uf.unite(a, b);
    if (uf.find(s) != uf.find(t)) return std::nullopt;

    std::vector<int> idx(net.nodes, -1);
    int m = 0;
    for (int v = 0; v < net.nodes; ++v)
        if (uf.find(v) == uf.find(s) && v != t) idx[v] = m++;
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m + 1, Rat(0)));
    for (const auto& [x, y, r] : net.res) {
        if (x == y) continue;
        Rat c = 1 / r;
        int ix = idx[x], iy = idx[y];
        if (ix >= 0) a[ix][ix] += c;
        if (iy >= 0) a[iy][iy] += c;
        if (ix >= 0 && iy >= 0) {
            a[ix][iy] -= c;
            a[iy][ix] -= c;
        }
    }
    a[idx[s]][m] = 1;

    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int row = col; row < m; ++row)
            if (a[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw DomainError("singular network system");
        std::swap(a[col], a[piv]);
        for (int row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (int k = col; k <= m; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return a[idx[s]][m] / a[idx[s]][idx[s]];
}

std::optional<Rat> resistance_multi(const Graph& g, std::vector<int> deleted,
                                    const GraphPoint& x, const GraphPoint& y) {
    if (same_point(g, x, y)) return Rat(0);
    NetBuilder nb{g, std::move(deleted), {}};
    int sx = nb.node_of(x), sy = nb.node_of(y);
    return net_resistance(nb.build(), sx, sy);
}

bool bridge_multi(const Graph& g, const std::vector<int>& deleted, int e) {
    if (g.is_loop(e)) return false;
    UnionFind uf(g.vertex_count());
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e) continue;
        if (std::find(deleted.begin(), deleted.end(), f) != deleted.end()) continue;
        uf.unite(g.edge_u(f), g.edge_v(f));
    }
    return uf.find(g.edge_u(e)) != uf.find(g.edge_v(e));
}

ResistanceProfile profile_multi(const Graph& g, std::vector<int> deleted,
                                const GraphPoint& x, int e) {
    ResistanceProfile out;
    out.edge = e;
    out.base = x;
    const Rat& L = g.length(e);
    int p = g.edge_u(e), q = g.edge_v(e);

    if (!x.is_vertex() && x.edge == e) {
        const Rat& s = x.offset;
        if (bridge_multi(g, deleted, e)) {
            out.pieces.push_back({0, s, Poly::linear(s, -1)});
            out.pieces.push_back({s, L, Poly::linear(-s, 1)});
        } else {
            auto re = resistance_multi(g, with(deleted, e), vertex_point(p), vertex_point(q));
            Rat R = L + *re;
            // d(R - d)/R with d = |t - s|
            Poly d1 = Poly::linear(s, -1), d2 = Poly::linear(-s, 1);
            out.pieces.push_back({0, s, (d1 * (Poly::constant(R) - d1)) * (1 / R)});
            out.pieces.push_back({s, L, (d2 * (Poly::constant(R) - d2)) * (1 / R)});
        }
        return out;
    }

    if (bridge_multi(g, deleted, e)) {
        // r grows linearly from the endpoint on x's side
        auto ru = resistance_multi(g, with(deleted, e), x, vertex_point(p));
        if (ru) {
            out.pieces.push_back({0, L, Poly::linear(*ru, 1)});
        } else {
            auto rv = resistance_multi(g, with(deleted, e), x, vertex_point(q));
            if (!rv) throw DomainError("profile base disconnected from edge");
            out.pieces.push_back({0, L, Poly::linear(*rv + L, -1)});
        }
        return out;
    }

    auto del = with(deleted, e);
    auto rpq = resistance_multi(g, del, vertex_point(p), vertex_point(q));
    auto rpx = resistance_multi(g, del, vertex_point(p), x);
    auto rqx = resistance_multi(g, del, vertex_point(q), x);
    if (!rpq || !rpx || !rqx) throw DomainError("profile base disconnected from edge");
    Rat a = (*rpq + *rpx - *rqx) / 2;
    Rat b = (*rpq + *rqx - *rpx) / 2;
    Rat c = (*rpx + *rqx - *rpq) / 2;
    // c + (a + t)(b + L - t)/(a + b + L)
    Poly num = Poly::linear(a, 1) * Poly::linear(b + L, -1);
    out.pieces.push_back({0, L, Poly::constant(c) + num * (1 / (a + b + L))});
    return out;
}

}  // namespace

Rat point_resistance(const Graph& g, const GraphPoint& x, const GraphPoint& y) {
    auto r = resistance_multi(g, {}, x, y);
    if (!r) throw DomainError("disconnected resistance query");
    return *r;
}

std::optional<Rat> point_resistance_ex(const Graph& g, int deleted, const GraphPoint& x,
                                       const GraphPoint& y) {
    std::vector<int> del;
    if (deleted >= 0) del.push_back(deleted);
    return resistance_multi(g, std::move(del), x, y);
}

std::optional<Rat> edge_complement_resistance(const Graph& g, int e) {
    if (g.is_loop(e)) return Rat(0);
    if (g.is_bridge(e)) return std::nullopt;
    return resistance_multi(g, {e}, vertex_point(g.edge_u(e)), vertex_point(g.edge_v(e)));
}

bool is_bridge_ex(const Graph& g, int deleted, int e) {
    std::vector<int> del;
    if (deleted >= 0) del.push_back(deleted);
    return bridge_multi(g, del, e);
}

ResistanceProfile resistance_profile(const Graph& g, const GraphPoint& x, int e) {
    return profile_multi(g, {}, x, e);
}

ResistanceProfile resistance_profile_ex(const Graph& g, int deleted, const GraphPoint& x,
                                        int e) {
    std::vector<int> del;
    if (deleted >= 0) del.push_back(deleted);
    return profile_multi(g, std::move(del), x, e);
}

}  // namespace mg
