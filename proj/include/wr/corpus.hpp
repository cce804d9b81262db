#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wr/graph.hpp"

namespace wr {

enum class corpus_status { word_representable, non_word_representable, unknown };

struct corpus_entry {
    std::string name;
    graph g;
    corpus_status expected_status = corpus_status::unknown;
    std::optional<std::vector<directed_edge>> reference_orientation;
    std::string note;  // provenance of the hand transcription
};

const corpus_entry& corpus_get(const std::string& name);  // throws errc::unknown_name
std::vector<std::string> corpus_names();
// exact text of the bundled edge-list file for an entry (mirrors data/corpus/<name>.txt)
const std::string& corpus_entry_text(const std::string& name);

// bundled reference refutation proofs, replayable by the transcript checker
struct reference_proof {
    std::string name;        // proof identifier (file stem under data/proofs/)
    std::string graph_name;  // corpus entry it refutes
    int source_vertex;       // source assumption supplied out-of-band
    std::string text;        // transcript text, mirrors data/proofs/<name>.txt
};
std::span<const reference_proof> reference_proofs();

}  // namespace wr
