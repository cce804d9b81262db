#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wr/graph.hpp"

namespace wr {

enum class edge_state : std::uint8_t { unoriented, forward, backward };
enum class edge_dir : std::uint8_t { forward, backward };

// Per-edge orientation state layered over a host graph. forward orients the
// canonical edge u->v (u < v), backward v->u. Values clone freely; distinct
// copies share nothing but the host graph.
class partial_orientation {
public:
    explicit partial_orientation(const graph& g)
        : host_(&g), st_(static_cast<size_t>(g.edge_count()), edge_state::unoriented) {}

    const graph& host() const { return *host_; }
    edge_state state_at(int edge_index) const { return st_[static_cast<size_t>(edge_index)]; }
    edge_state state(edge_id e) const { return st_[static_cast<size_t>(host_->require_edge_index(e))]; }
    int oriented_count() const { return oriented_; }
    bool complete() const { return oriented_ == host_->edge_count(); }

    void set(edge_id e, edge_dir d) { set_index(host_->require_edge_index(e), d); }
    void set_index(int edge_index, edge_dir d);
    void set_directed(directed_edge de);  // orient de.from -> de.to

    // nullopt when unoriented
    std::optional<directed_edge> directed_at(int edge_index) const;
    void reverse_all();

    std::string to_text() const;  // "u->v" per oriented edge, canonical order

    friend bool operator==(const partial_orientation& a, const partial_orientation& b) {
        return *a.host_ == *b.host_ && a.st_ == b.st_;
    }

private:
    const graph* host_;
    std::vector<edge_state> st_;
    int oriented_ = 0;
};

struct shortcut_witness {
    std::vector<int> path;        // v0 -> v1 -> ... -> vk, k >= 2, oriented edges
    directed_edge shortcut_edge;  // v0 -> vk, oriented
    std::pair<int, int> missing_pair;  // non-adjacent path vertices
};

enum class violation_kind { none, directed_cycle, shortcut };

struct violation_report {
    violation_kind kind = violation_kind::none;
    std::optional<std::vector<int>> cycle;  // v0 -> v1 -> ... -> vk -> v0
    std::optional<shortcut_witness> shortcut;
};

// Complete over the oriented edges: returns none only when the oriented
// subgraph has no directed cycle and no shortcut. Witnesses are shortest
// (BFS layering) and deterministic.
violation_report detect_violation(const partial_orientation& po);

// Requires a complete orientation (errc::incomplete_orientation otherwise).
std::pair<bool, violation_report> is_semi_transitive(const partial_orientation& po);

// Allocation-free complete-orientation test for exhaustive enumeration.
// Hosts up to 32 vertices / 64 edges; dirmask bit i set = canonical edge i
// oriented backward.
class violation_scanner {
public:
    explicit violation_scanner(const graph& g);
    bool semi_transitive(std::uint64_t dirmask) const;

private:
    const graph* host_;
    int n_;
    int m_;
    std::vector<std::pair<int, int>> ends_;         // 0-based endpoints per edge
    std::vector<std::pair<int, int>> nonedges_;     // 0-based, x < y
    std::vector<std::uint32_t> adj_;                // 0-based adjacency masks
};

}  // namespace wr
