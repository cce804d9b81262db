#pragma once

#include <optional>

#include "wr/cycles.hpp"
#include "wr/orientation.hpp"
#include "wr/transcript.hpp"

namespace wr {

enum class branch_algorithm : int { alg1 = 1, alg2 = 2, alg3 = 3 };

struct search_config {
    branch_algorithm algorithm = branch_algorithm::alg2;
    std::optional<int> source_vertex;    // assume this vertex is a source
    std::optional<edge_id> first_edge;   // override the WLOG first edge
    std::optional<int> max_cycle_length; // catalog cap; default policy otherwise
    std::size_t copy_limit = 1000000;
};

// One pending Copy: a numbered partially oriented clone awaiting refutation.
struct search_state {
    int copy_id = 0;
    partial_orientation po;
    std::optional<directed_edge> branch_edge;  // the reversed branch that created it
};

struct search_stats {
    std::size_t copies = 0;    // including Copy 1
    std::size_t lines = 0;
    std::size_t forcings = 0;  // forcing steps applied
};

struct prove_result {
    bool representable = false;
    std::optional<partial_orientation> orientation;  // certificate when representable
    std::optional<proof_transcript> transcript;      // refutation otherwise
    search_stats stats;
};

// Catalog cap policy: no cap up to 12 vertices, length 6 beyond.
cycle_limits default_cycle_limits(const graph& g);

// All edges at v oriented away from v, everything else unoriented.
partial_orientation source_init(const graph& g, int v);

// Branch-edge choice at a quiescent, incomplete state.
//   alg1: unoriented non-bridge edge with the most catalog cycles (tie: lex).
//   alg2: cycle with fewest unoriented edges (tie: canonical order), then its
//         unoriented edge with the most cycles (tie: lex).
//   alg3: cycles ranked by most same-direction oriented edges first, then as alg2.
// Throws errc::no_branchable_edge when every non-bridge edge is oriented.
edge_id select_branch_edge(const partial_orientation& po, const cycle_catalog& cat, branch_algorithm alg);

// Depth-first branch-and-propagate search. Returns a semi-transitive
// orientation or a checker-valid refutation transcript. Deterministic:
// identical inputs give byte-identical transcripts.
prove_result prove(const graph& g, const search_config& cfg = {});

}  // namespace wr
