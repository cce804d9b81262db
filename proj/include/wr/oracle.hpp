#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wr/graph.hpp"
#include "wr/orientation.hpp"

namespace wr {

using word = std::vector<int>;

// Strict alternation of x and y in w after deleting every other letter.
// Zero or one total occurrences alternate vacuously.
bool alternates(const word& w, int x, int y);

// Every vertex must occur in w (errc::missing_letter). True iff alternation
// matches adjacency on every pair.
bool word_represents(const word& w, const graph& g);

// Leftmost-occurrence orientation of a representing word; the first letter of
// w becomes a source. Throws errc::not_a_representation.
partial_orientation orientation_from_word(const word& w, const graph& g);

struct uniform_search_limits {
    int max_letters = 21;                     // guard: k * n <= max_letters
    std::uint64_t max_nodes = 500'000'000;    // search-tree expansion budget
};

// Exhaustive pruned search for a k-uniform representing word. Cyclic-shift
// symmetry pins the first letter to vertex 1. nullopt = no such word.
std::optional<word> search_uniform_word(const graph& g, int k, uniform_search_limits lim = {});

struct oracle_verdict {
    std::uint64_t semi_transitive_count = 0;         // over all 2^|E| orientations
    std::optional<partial_orientation> example;      // present iff count > 0
    std::uint64_t enumerated = 0;                    // 2^|E|
};

struct oracle_limits {
    int max_edges = 24;  // errc::too_many_edges beyond this
};

// Exhaustive count of semi-transitive orientations. The first canonical edge
// is fixed and the count doubled (reversal symmetry). The parallel kernel and
// the serial reference return identical verdicts; the example orientation is
// the one with the smallest enumeration index.
oracle_verdict brute_force_count(const graph& g, oracle_limits lim = {});
oracle_verdict brute_force_count_serial(const graph& g, oracle_limits lim = {});

struct pretest_vertex {
    int vertex = 0;
    bool neighborhood_comparability = true;
    // forcing chain witnessing the contradiction, in host labels: the first
    // entry's orientation forces each next one, ending at the first entry
    // reversed
    std::vector<directed_edge> obstruction;
};

struct pretest_report {
    std::vector<pretest_vertex> per_vertex;
    bool conclusive = false;  // some neighborhood is not a comparability graph
};

// Necessary-condition test: every neighborhood of a word-representable graph
// admits a transitive orientation. conclusive=true certifies
// non-word-representability; false tells nothing.
pretest_report neighborhood_pretest(const graph& g);

}  // namespace wr
