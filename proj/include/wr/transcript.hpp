#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wr/graph.hpp"

namespace wr {

// Proof-line instructions. A line is a refutation trace for one Copy: an
// optional move/initial prefix, branches and forced orientations, ending in a
// terminator.
struct instr_initial_edge {
    directed_edge edge;
    friend bool operator==(const instr_initial_edge&, const instr_initial_edge&) = default;
};
struct instr_move_to_copy {
    int copy_id = 0;
    directed_edge reminder;  // the reversed branch edge recorded at creation
    friend bool operator==(const instr_move_to_copy&, const instr_move_to_copy&) = default;
};
struct instr_branch {
    directed_edge edge;
    int new_copy_id = 0;
    friend bool operator==(const instr_branch&, const instr_branch&) = default;
};
struct instr_orient {
    std::vector<directed_edge> edges;  // one or two
    std::vector<int> cycle;            // justification, as cited
    friend bool operator==(const instr_orient&, const instr_orient&) = default;
};
using instruction = std::variant<instr_initial_edge, instr_move_to_copy, instr_branch, instr_orient>;

// S: shortcut path v0-...-vk with shortcutting edge v0->vk.
// E: non-clique cycle whose one unoriented edge cannot be oriented either way.
// D: directed cycle v0->...->vk->v0 among oriented edges.
enum class terminator_kind : std::uint8_t { shortcut, error, directed_cycle };
struct terminator {
    terminator_kind kind = terminator_kind::shortcut;
    std::vector<int> vertices;
    friend bool operator==(const terminator&, const terminator&) = default;
};

struct proof_line {
    std::vector<instruction> instructions;
    terminator term;
    friend bool operator==(const proof_line&, const proof_line&) = default;
};

struct proof_transcript {
    std::optional<std::string> graph_name;
    std::optional<int> source_vertex;
    std::vector<proof_line> lines;
    friend bool operator==(const proof_transcript&, const proof_transcript&) = default;
};

// Text form: one numbered line per proof line, single spaces, "->" arrows:
//   1. 1->2 B3->4 (Copy 2) O5->6 O7->8 (C5-6-8-7) S:1-2-3
// Optional "graph NAME" and "source V" header lines come first.
std::string render(const proof_transcript& t);

// Accepts the unicode arrow as an alias of "->". Skips blank lines and lines
// starting with '#'. Throws parse_error on malformed input.
proof_transcript parse_transcript(const std::string& text);

struct check_failure {
    int line = 0;               // 1-based proof line; 0 = structural/global
    int instruction_index = 0;  // 0-based; -1 = terminator or line-level
    std::string reason;
};

struct check_report {
    bool valid = false;
    std::vector<check_failure> failures;
    std::vector<std::pair<int, bool>> coverage;  // copy id -> discharged
    std::vector<std::string> witness_details;    // auto-found shortcut pairs etc.
    std::vector<std::string> assumptions;        // WLOG / source notes
};

// Replays the transcript against g, enforcing every instruction's premise and
// auditing copy coverage. Independent of the search: uses only graph and
// orientation primitives. source_override supplies the source assumption when
// the transcript does not carry one; if both are present they must agree.
check_report check(const graph& g, const proof_transcript& t, std::optional<int> source_override = {});

}  // namespace wr
