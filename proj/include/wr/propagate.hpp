#pragma once

#include <optional>
#include <vector>

#include "wr/cycles.hpp"
#include "wr/orientation.hpp"

namespace wr {

enum class forcing_kind : std::uint8_t { single_o, double_o };

// One forced orientation step with its cycle justification (index into the
// catalog). Forced edges appear in traversal order from the cycle's
// canonical head.
struct forcing_step {
    forcing_kind kind = forcing_kind::single_o;
    std::vector<directed_edge> forced;
    int cycle_index = -1;
};

// A non-clique cycle with all but one edge oriented the same way around it:
// the remaining edge cannot be oriented either way.
struct error_cycle {
    int cycle_index = -1;
    edge_id unorientable;
};

struct cycle_analysis {
    std::optional<forcing_step> step;
    std::optional<error_cycle> error;
};

// Classifies one catalog cycle against the current edge states. Examines both
// traversal directions; returns the applicable forcing, an error cycle, or
// neither.
cycle_analysis cycle_forcing(const cycle_catalog& cat, int cycle_index, const partial_orientation& po);

enum class terminal_kind : std::uint8_t {
    quiescent,
    shortcut_found,
    directed_cycle_found,
    error_cycle_found,
};

struct propagation_outcome {
    std::vector<forcing_step> steps;  // applied, in order
    terminal_kind terminal = terminal_kind::quiescent;
    std::optional<shortcut_witness> shortcut;
    std::optional<std::vector<int>> directed_cycle;
    std::optional<error_cycle> error;
};

// Runs forcing to fixpoint: scans the catalog in canonical order, applies the
// first applicable step, re-checks for violations after every forced edge,
// and repeats until nothing fires or a terminal violation appears. A terminal
// outcome means the state cannot extend to a semi-transitive orientation.
propagation_outcome propagate_fixpoint(partial_orientation& po, const cycle_catalog& cat);

}  // namespace wr
