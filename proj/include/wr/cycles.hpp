#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wr/graph.hpp"

namespace wr {

// Simple cycle in canonical form: smallest label first, then the
// lexicographically smaller of the two directions.
struct cycle_record {
    std::vector<int> vertices;
    bool induces_clique = false;
    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const cycle_record&, const cycle_record&) = default;
};

struct cycle_limits {
    std::optional<int> max_length;    // >= 3 when set; unset = no cap
    std::size_t max_cycles = 500000;  // overflow guard: errc::catalog_overflow
};

class cycle_catalog {
public:
    cycle_catalog(const graph& g, std::vector<cycle_record> cycles, std::optional<int> cap);

    const graph& host() const { return *host_; }
    const std::vector<cycle_record>& cycles() const { return cycles_; }
    int size() const { return static_cast<int>(cycles_.size()); }
    std::optional<int> max_length_cap() const { return cap_; }
    // number of catalog cycles containing canonical edge i
    int per_edge_count(int edge_index) const { return edge_counts_[static_cast<size_t>(edge_index)]; }
    const std::vector<int>& edge_counts() const { return edge_counts_; }
    // canonical edge indices around cycle k's traversal: slot j joins
    // vertices[j] and vertices[(j+1) % m]
    std::span<const int> edge_slots(int cycle_index) const;

private:
    const graph* host_;
    std::vector<cycle_record> cycles_;
    std::optional<int> cap_;
    std::vector<int> edge_counts_;
    std::vector<int> slot_data_;
    std::vector<int> slot_offsets_;
};

cycle_catalog enumerate_cycles(const graph& g, cycle_limits lim = {});

// one cycle per line: "m: x1-x2-...-xm [clique|nonclique]"
std::string dump_catalog(const cycle_catalog& cat);

std::vector<std::pair<edge_id, int>> edge_cycle_counts(const cycle_catalog& cat);

}  // namespace wr
