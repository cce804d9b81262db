#include "wr/graph.hpp"

#include <algorithm>

namespace wr {

graph::graph(int n, std::vector<edge_id> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw error(errc::malformed_input, "negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.u == e.v) throw error(errc::malformed_input, "self-loop on vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > n_)
            throw error(errc::unknown_vertex, "edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                                  std::to_string(e.v));
        if (i > 0 && edges_[i - 1] == e)
            throw error(errc::malformed_input,
                        "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adj_.assign(static_cast<size_t>(n_) + 1, {});
    edge_lookup_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
        edge_lookup_[static_cast<size_t>(e.u - 1) * n_ + (e.v - 1)] = static_cast<int>(i);
        edge_lookup_[static_cast<size_t>(e.v - 1) * n_ + (e.u - 1)] = static_cast<int>(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& graph::neighbors(int v) const {
    if (!has_vertex(v)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
    return adj_[static_cast<size_t>(v)];
}

bool graph::adjacent(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    return edge_lookup_[static_cast<size_t>(u - 1) * n_ + (v - 1)] >= 0;
}

std::optional<int> graph::edge_index(edge_id e) const {
    if (!has_vertex(e.u) || !has_vertex(e.v) || e.u == e.v) return std::nullopt;
    int i = edge_lookup_[static_cast<size_t>(e.u - 1) * n_ + (e.v - 1)];
    if (i < 0) return std::nullopt;
    return i;
}

int graph::require_edge_index(edge_id e) const {
    auto i = edge_index(e);
    if (!i)
        throw error(errc::unknown_edge, "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    return *i;
}

bool graph::is_connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

std::vector<std::vector<int>> graph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    for (int s = 1; s <= n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<bool> graph::bridge_edges() const {
    // iterative DFS lowlink
    std::vector<bool> bridge(edges_.size(), false);
    std::vector<int> disc(static_cast<size_t>(n_) + 1, 0), low(static_cast<size_t>(n_) + 1, 0);
    int timer = 0;
    struct frame {
        int v;
        int parent_edge;  // edge index used to enter v, -1 at root
        size_t next;      // next neighbor position
    };
    for (int root = 1; root <= n_; ++root) {
        if (disc[static_cast<size_t>(root)]) continue;
        std::vector<frame> stack{{root, -1, 0}};
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = ++timer;
        while (!stack.empty()) {
            frame& f = stack.back();
            const auto& nb = adj_[static_cast<size_t>(f.v)];
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                int ei = edge_lookup_[static_cast<size_t>(f.v - 1) * n_ + (w - 1)];
                if (ei == f.parent_edge) continue;
                if (disc[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                } else {
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = ++timer;
                    stack.push_back({w, ei, 0});
                }
            } else {
                frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(done.v)]);
                    if (low[static_cast<size_t>(done.v)] > disc[static_cast<size_t>(p)])
                        bridge[static_cast<size_t>(done.parent_edge)] = true;
                }
            }
        }
    }
    return bridge;
}

induced_result induced_subgraph(const graph& g, const std::vector<int>& vs) {
    if (vs.empty()) throw error(errc::empty_vertex_set, "induced subgraph of empty vertex set");
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> pos(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (!g.has_vertex(sorted[i]))
            throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(sorted[i]));
        pos[static_cast<size_t>(sorted[i])] = static_cast<int>(i) + 1;
    }
    std::vector<edge_id> es;
    for (const auto& e : g.edges()) {
        int a = pos[static_cast<size_t>(e.u)], b = pos[static_cast<size_t>(e.v)];
        if (a && b) es.emplace_back(a, b);
    }
    return {graph(static_cast<int>(sorted.size()), std::move(es)), std::move(sorted)};
}

bool is_clique(const graph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace wr
