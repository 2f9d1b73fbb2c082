#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mg/scalar.hpp"

namespace mg {

struct VertexSpec {
    std::string id;
    long long q = 0;
};

struct EdgeSpec {
    std::string id;
    std::string u, v;
    Rat length;
};

// Raw description before validation.
struct GraphSpec {
    std::vector<VertexSpec> vertices;
    std::vector<EdgeSpec> edges;
};

enum class Defect {
    Empty,
    DuplicateId,
    UnknownVertex,
    NonPositiveLength,
    NegativeQ,
    NonEffectiveK,
    NotConnected,
};

struct Violation {
    Defect kind;
    std::string subject;  // vertex or edge id, empty for graph-wide defects
};

std::string describe(const Violation& v);

// A location on the graph: a vertex, or an interior point of an edge.
struct GraphPoint {
    int vertex = -1;       // >= 0 for vertex points
    int edge = -1;         // >= 0 for edge points
    Rat offset;            // in (0, length) for edge points

    bool is_vertex() const { return vertex >= 0; }
};

struct Divisor {
    std::vector<std::pair<GraphPoint, Rat>> terms;
    Rat degree() const;
};

class Graph {
  public:
    static std::variant<Graph, std::vector<Violation>> validate(const GraphSpec& spec);
    // Throws DomainError listing all violations; convenient for fixtures.
    static Graph must(const GraphSpec& spec);

    int vertex_count() const { return static_cast<int>(q_.size()); }
    int edge_count() const { return static_cast<int>(len_.size()); }
    const std::string& vertex_id(int v) const { return vid_[v]; }
    const std::string& edge_id(int e) const { return eid_[e]; }
    long long q(int v) const { return q_[v]; }
    int edge_u(int e) const { return eu_[e]; }
    int edge_v(int e) const { return ev_[e]; }
    const Rat& length(int e) const { return len_[e]; }

    int vertex_index(const std::string& id) const;  // -1 if absent
    int edge_index(const std::string& id) const;

    int valence(int v) const;  // loops count twice
    long long ord_K(int v) const { return valence(v) + 2 * q_[v] - 2; }
    int betti() const { return edge_count() - vertex_count() + 1; }
    int genus() const;
    Rat total_length() const;
    Divisor canonical_divisor() const;

    bool is_loop(int e) const { return eu_[e] == ev_[e]; }
    bool is_bridge(int e) const;
    // 0 for non-bridges, else min(h, g-h) over the two sides of the cut.
    long long edge_type(int e) const;
    std::map<long long, Rat> type_lengths() const;

    GraphSpec spec() const;

  private:
    Graph() = default;
    std::vector<std::string> vid_, eid_;
    std::vector<long long> q_;
    std::vector<int> eu_, ev_;
    std::vector<Rat> len_;
    std::map<std::string, int> vindex_, eindex_;
    std::vector<bool> bridge_;  // computed at validation
};

GraphPoint vertex_point(int v);
// Normalizes offsets 0 and length to the endpoint vertex points.
GraphPoint edge_point(const Graph& g, int e, const Rat& offset);
bool same_point(const Graph& g, const GraphPoint& a, const GraphPoint& b);

// One pointed-sum component: a 2-edge-connected block or a single bridge
// edge, carrying the quotient polarization (fiber genus at every vertex).
struct Component {
    Graph graph;
    std::vector<int> vertex_map;  // component vertex -> original vertex
    std::vector<int> edge_map;    // component edge -> original edge
};

std::vector<Component> decompose_pointed_sum(const Graph& g);
bool is_two_edge_connected(const Graph& g);
// Every edge lies in at most one circle, i.e. every block has Betti number 1.
bool is_elementary(const Graph& g);

}  // namespace mg
