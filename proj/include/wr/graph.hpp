#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "wr/error.hpp"

namespace wr {

// Canonical undirected edge: u < v, labels 1-based.
struct edge_id {
    int u = 0;
    int v = 0;
    edge_id() = default;
    edge_id(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend auto operator<=>(const edge_id&, const edge_id&) = default;
};

struct directed_edge {
    int from = 0;
    int to = 0;
    edge_id undirected() const { return edge_id(from, to); }
    directed_edge reversed() const { return {to, from}; }
    friend auto operator<=>(const directed_edge&, const directed_edge&) = default;
};

// Immutable simple undirected graph on vertices 1..n with a fixed canonical
// edge order (sorted edge_id). Safe to share between threads once built.
class graph {
public:
    graph() = default;
    graph(int n, std::vector<edge_id> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::span<const edge_id> edges() const { return edges_; }
    edge_id edge_at(int index) const { return edges_[static_cast<size_t>(index)]; }
    bool has_vertex(int v) const { return v >= 1 && v <= n_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    std::optional<int> edge_index(edge_id e) const;
    int require_edge_index(edge_id e) const;  // throws errc::unknown_edge

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;  // each sorted ascending
    // bridge_edges()[i] is true iff canonical edge i lies on no simple cycle
    std::vector<bool> bridge_edges() const;

    friend bool operator==(const graph& a, const graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<edge_id> edges_;
    std::vector<std::vector<int>> adj_;  // adj_[v], 1-based, sorted
    std::vector<int> edge_lookup_;       // (u-1)*n+(v-1) -> edge index, -1 absent
};

struct induced_result {
    graph g;
    std::vector<int> label_map;  // label_map[i] = original label of new vertex i+1
};

// Induced subgraph on vs, renumbered 1..|vs| by ascending original label.
induced_result induced_subgraph(const graph& g, const std::vector<int>& vs);

// True iff every pair in vs is adjacent (|vs| <= 1 gives true).
bool is_clique(const graph& g, const std::vector<int>& vs);

}  // namespace wr
