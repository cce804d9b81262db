#include "wr/corpus.hpp"

#include <algorithm>
#include <map>

#include "wr/graph_io.hpp"

namespace wr {

namespace {

struct raw_entry {
    const char* name;
    const char* edge_list;  // byte-identical to data/corpus/<name>.txt
    const char* note;
};

// Hand-transcribed corpus. Every entry was cross-checked by exhaustive
// orientation enumeration (non-word-representable entries have zero
// semi-transitive orientations; the two prime variants have many).
const raw_entry k_raw_entries[] = {
    {"g7-1",
     R"(# seven-vertex non-word-representable catalog, entry 1
7 11
1 2
1 3
1 4
1 5
1 6
2 3
2 6
3 4
3 7
4 5
5 6
)",
     "seven-vertex non-word-representable catalog, entry 1"},
    {"g7-2",
     R"(# seven-vertex non-word-representable catalog, entry 2
7 12
1 2
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
4 5
4 7
5 6
)",
     "seven-vertex non-word-representable catalog, entry 2"},
    {"g7-3",
     R"(# seven-vertex non-word-representable catalog, entry 3
7 13
1 2
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
3 7
4 5
4 7
5 6
)",
     "seven-vertex non-word-representable catalog, entry 3"},
    {"g7-4",
     R"(# seven-vertex non-word-representable catalog, entry 4
7 13
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
2 7
3 4
4 5
4 7
5 6
)",
     "seven-vertex non-word-representable catalog, entry 4"},
    {"g7-5",
     R"(# seven-vertex non-word-representable catalog, entry 5
7 11
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
3 4
4 5
5 6
)",
     "seven-vertex non-word-representable catalog, entry 5"},
    {"g7-6",
     R"(# seven-vertex non-word-representable catalog, entry 6
7 12
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
3 4
3 7
4 5
5 6
)",
     "seven-vertex non-word-representable catalog, entry 6"},
    {"g7-7",
     R"(# seven-vertex non-word-representable catalog, entry 7
7 12
1 2
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
3 7
4 5
5 6
)",
     "seven-vertex non-word-representable catalog, entry 7"},
    {"g7-8",
     R"(# seven-vertex non-word-representable catalog, entry 8
7 13
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
2 7
3 4
3 7
4 5
5 6
)",
     "seven-vertex non-word-representable catalog, entry 8"},
    {"g7-9",
     R"(# seven-vertex non-word-representable catalog, entry 9
7 13
1 2
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
3 7
4 5
5 6
5 7
)",
     "seven-vertex non-word-representable catalog, entry 9"},
    {"g7-10",
     R"(# seven-vertex non-word-representable catalog, entry 10
7 14
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
2 7
3 4
3 7
4 5
5 6
5 7
)",
     "seven-vertex non-word-representable catalog, entry 10"},
    {"g7-11",
     R"(# seven-vertex non-word-representable catalog, entry 11
7 14
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
2 7
3 4
3 7
4 5
5 6
6 7
)",
     "seven-vertex non-word-representable catalog, entry 11"},
    {"g7-12",
     R"(# seven-vertex non-word-representable catalog, entry 12
7 13
1 2
1 3
1 4
1 6
2 3
2 6
2 7
3 4
3 5
3 6
3 7
4 5
5 6
)",
     "seven-vertex non-word-representable catalog, entry 12"},
    {"g7-13",
     R"(# seven-vertex non-word-representable catalog, entry 13
7 12
1 3
1 5
1 6
2 3
2 6
2 7
3 4
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 13"},
    {"g7-14",
     R"(# seven-vertex non-word-representable catalog, entry 14
7 13
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 14"},
    {"g7-15",
     R"(# seven-vertex non-word-representable catalog, entry 15
7 14
1 2
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 15"},
    {"g7-16",
     R"(# seven-vertex non-word-representable catalog, entry 16
7 15
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
2 7
3 4
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 16"},
    {"g7-17",
     R"(# seven-vertex non-word-representable catalog, entry 17
7 15
1 2
1 3
1 4
1 5
1 6
2 3
2 4
2 6
2 7
3 4
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 17"},
    {"g7-18",
     R"(# seven-vertex non-word-representable catalog, entry 18
7 15
1 2
1 3
1 4
1 5
1 6
2 3
2 6
2 7
3 4
3 7
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 18"},
    {"g7-19",
     R"(# seven-vertex non-word-representable catalog, entry 19
7 16
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 6
2 7
3 4
3 7
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 19"},
    {"g7-20",
     R"(# seven-vertex non-word-representable catalog, entry 20; two spurious edges (2-7, 4-7) in the source drawing removed (as drawn the graph admits semi-transitive orientations)
7 15
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 6
3 4
3 7
4 5
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 20; two spurious edges (2-7, 4-7) in the source drawing removed (as drawn the graph admits semi-transitive orientations)"},
    {"g7-21",
     R"(# seven-vertex non-word-representable catalog, entry 21
7 13
1 2
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 6
3 4
3 6
5 6
6 7
)",
     "seven-vertex non-word-representable catalog, entry 21"},
    {"g7-22",
     R"(# seven-vertex non-word-representable catalog, entry 22
7 12
1 2
1 3
1 4
2 3
2 4
2 5
2 7
3 4
3 5
3 6
4 6
4 7
)",
     "seven-vertex non-word-representable catalog, entry 22"},
    {"g7-23",
     R"(# seven-vertex non-word-representable catalog, entry 23
7 15
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 7
3 4
3 5
3 6
4 6
4 7
)",
     "seven-vertex non-word-representable catalog, entry 23"},
    {"g7-24",
     R"(# seven-vertex non-word-representable catalog, entry 24; center spoke 1-4 restored (as drawn the graph duplicates entry 9)
7 14
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 7
3 4
3 5
3 6
4 6
4 7
)",
     "seven-vertex non-word-representable catalog, entry 24; center spoke 1-4 restored (as drawn the graph duplicates entry 9)"},
    {"g7-25",
     R"(# seven-vertex non-word-representable catalog, entry 25
7 12
1 2
1 3
1 4
1 5
1 6
1 7
2 7
3 5
4 6
5 6
5 7
6 7
)",
     "seven-vertex non-word-representable catalog, entry 25"},
    {"w5",
     R"(# wheel W5: hub 1 over rim 2-3-4-5-6; the minimal non-word-representable graph
6 10
1 2
1 3
1 4
1 5
1 6
2 3
2 6
3 4
4 5
5 6
)",
     "wheel W5: hub 1 over rim 2-3-4-5-6; the minimal non-word-representable graph"},
    {"g12prime",
     R"(# seven-vertex graph long mislisted as non-word-representable; ships with a verified semi-transitive orientation
7 12
1 2
1 4
1 6
2 3
2 6
2 7
3 4
3 5
3 6
3 7
4 5
5 6
)",
     "seven-vertex graph long mislisted as non-word-representable; ships with a verified semi-transitive orientation"},
    {"g17prime",
     R"(# seven-vertex graph long mislisted as non-word-representable; ships with a verified semi-transitive orientation
7 16
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 6
2 7
3 4
4 5
4 7
5 6
5 7
6 7
)",
     "seven-vertex graph long mislisted as non-word-representable; ships with a verified semi-transitive orientation"},
    {"shrikhande",
     R"(# Shrikhande graph, standard 16-vertex drawing labelling
16 48
1 2
1 4
1 5
1 8
1 9
1 12
2 3
2 5
2 6
2 9
2 10
3 4
3 6
3 7
3 10
3 11
4 7
4 8
4 11
4 12
5 10
5 12
5 13
5 14
6 9
6 11
6 14
6 15
7 10
7 12
7 15
7 16
8 9
8 11
8 13
8 16
9 15
9 16
10 13
10 16
11 13
11 14
12 14
12 15
13 14
13 16
14 15
15 16
)",
     "Shrikhande graph, standard 16-vertex drawing labelling"},
    {"clebsch",
     R"(# Clebsch graph, circular 16-vertex labelling
16 40
1 4
1 7
1 9
1 11
1 16
2 3
2 4
2 10
2 15
2 16
3 6
3 9
3 11
3 13
4 5
4 6
4 12
5 8
5 11
5 13
5 15
6 7
6 8
6 14
7 10
7 13
7 15
8 9
8 10
8 16
9 12
9 15
10 11
10 12
11 14
12 13
12 14
13 16
14 15
14 16
)",
     "Clebsch graph, circular 16-vertex labelling"},
    {"sub-S",
     R"(# minimal non-word-representable induced subgraph of the Shrikhande graph (original vertices 4,6,8,11,12,13,14,15,16 renumbered ascending)
9 17
1 3
1 4
1 5
2 4
2 7
2 8
3 4
3 6
3 9
4 6
4 7
5 7
5 8
6 7
6 9
7 8
8 9
)",
     "minimal non-word-representable induced subgraph of the Shrikhande graph (original vertices 4,6,8,11,12,13,14,15,16 renumbered ascending)"},
    {"sub-S-relabeled",
     R"(# subgraph S with the labelling used by the bundled reference proof (source vertex 1)
9 17
1 2
1 3
1 4
1 5
1 6
2 3
2 7
3 4
3 8
4 5
4 8
5 6
5 7
5 9
6 9
7 9
8 9
)",
     "subgraph S with the labelling used by the bundled reference proof (source vertex 1)"},
    {"sub-C",
     R"(# minimal non-word-representable induced subgraph of the Clebsch graph (original vertices 1-6,8-12 renumbered ascending; coincides with the reference-proof labelling)
11 20
1 4
1 8
1 10
2 3
2 4
2 9
3 6
3 8
3 10
4 5
4 6
4 11
5 7
5 10
6 7
7 8
7 9
8 11
9 10
9 11
)",
     "minimal non-word-representable induced subgraph of the Clebsch graph (original vertices 1-6,8-12 renumbered ascending; coincides with the reference-proof labelling)"},
    {"sub-C-relabeled",
     R"(# subgraph C with the labelling used by the bundled reference proof (source vertex 4)
11 20
1 4
1 8
1 10
2 3
2 4
2 9
3 6
3 8
3 10
4 5
4 6
4 11
5 7
5 10
6 7
7 8
7 9
8 11
9 10
9 11
)",
     "subgraph C with the labelling used by the bundled reference proof (source vertex 4)"},

};

struct raw_orientation {
    const char* name;
    const char* arrows;  // space-separated "a->b" items
};

// Verified semi-transitive orientations for the two prime variants.
const raw_orientation k_raw_orientations[] = {
    {"g12prime", "1->2 1->4 1->6 2->7 2->6 3->7 3->2 3->5 3->6 3->4 5->6 5->4"},
    {"g17prime", "1->2 1->3 1->4 1->5 1->6 1->7 2->3 2->4 2->6 2->7 3->4 5->6 5->7 5->4 7->6 7->4"},
};

std::vector<directed_edge> parse_arrows(const std::string& s) {
    std::vector<directed_edge> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        size_t j = s.find(' ', i);
        if (j == std::string::npos) j = s.size();
        std::string tok = s.substr(i, j - i);
        i = j;
        if (tok.empty()) continue;
        size_t arrow = tok.find("->");
        out.push_back({std::stoi(tok.substr(0, arrow)), std::stoi(tok.substr(arrow + 2))});
    }
    return out;
}

std::map<std::string, corpus_entry> build_corpus() {
    std::map<std::string, corpus_entry> out;
    for (const auto& raw : k_raw_entries) {
        corpus_entry e;
        e.name = raw.name;
        e.g = parse_graph(raw.edge_list, graph_format::edge_list);
        e.note = raw.note;
        e.expected_status = corpus_status::non_word_representable;
        out.emplace(e.name, std::move(e));
    }
    for (const auto& raw : k_raw_orientations) {
        auto& e = out.at(raw.name);
        e.expected_status = corpus_status::word_representable;
        e.reference_orientation = parse_arrows(raw.arrows);
    }
    return out;
}

const std::map<std::string, corpus_entry>& corpus() {
    static const std::map<std::string, corpus_entry> c = build_corpus();
    return c;
}

// Reference refutation proofs, replayable against the named corpus graphs
// under the stated source assumption. Byte-identical to data/proofs/<name>.txt.
const reference_proof k_reference_proofs[] = {
    {"shrikhande-sub-s", "sub-S-relabeled", 1,
     R"(1. B5→6 (Copy 2) O5→4 (C1-6-5-4) O3→4 (C1-5-4-3) O3→2 (C1-4-3-2) B5→7 (Copy 3) O2→7 (C1-5-7-2) B3→8 (Copy 4) O4→8 (C1-4-8-3) O9→8 O5→9 (C4-8-9-5) O6→9 (C1-6-9-5) O7→9 (C5-7-9-6) S:3-2-7-9-8
2. MC4 8→3 O8→4 (C3-8-4) O9→7 O8→9 (C2-7-9-8-3) O5→9 (C4-8-9-5) O6→9 (C1-6-9-5) S:5-6-9-7
3. MC3 7→5 O7→2 (C1-5-7-2) O7→9 O9→6 (C5-7-9-6) O9→5 (C1-6-9-5) O8→4 O9→8 (C4-8-9-5) O8→3 (C1-4-8-3) S:7-9-8-3-2
4. MC2 6→5 O4→5 (C1-6-5-4) O4→3 (C1-5-4-3) O2→3 (C1-4-3-2) B5→7 (Copy 5) O2→7 (C1-5-7-2) O9→7 O6→9 (C5-7-9-6) O5→9 (C1-6-9-5) O4→8 O8→9 (C4-8-9-5) O3→8 (C1-4-8-3) S:2-3-8-9-7
5. MC5 7→5 O7→2 (C1-5-7-2) B3→8 (Copy 6) O4→8 (C3-8-4) O7→9 O9→8 (C2-7-9-8-3) O9→5 (C4-8-9-5) O9→6 (C1-6-9-5) S:7-9-6-5
6. MC6 8→3 O8→4 (C1-4-8-3) O8→9 O9→5 (C4-8-9-5) O9→6 (C1-6-9-5) O9→7 (C5-7-9-6) S:8-9-7-2-3
)"},
    {"clebsch-sub-c", "sub-C-relabeled", 4,
     R"(1. B6→7 (Copy 2) O5→7 (C4-6-7-5) B3→6 (Copy 3) O3→2 (C2-4-6-3) O3→8 O8→7 (C3-8-7-6) B8→11 (Copy 4) O8→1 (C1-8-11-4) O10→1 O3→10 (C1-10-3-8) O10→5 (C1-10-5-4) O10→9 O9→7 (C5-10-9-7) O2→9 (C2-9-10-3) O11→9 (C2-9-11-4) S:8-11-9-7
2. MC4 11→8 O1→8 (C1-8-11-4) O9→7 O11→9 (C7-9-11-8) O2→9 (C2-9-11-4) O10→9 O3→10 (C2-9-10-3) O1→10 (C1-10-3-8) O5→10 (C1-10-5-4) S:5-10-9-7
3. MC3 6→3 O2→3 (C2-4-6-3) B2→9 (Copy 5) O11→9 (C2-9-11-4) B7→9 (Copy 6) O5→10 O10→9 (C5-10-9-7) O1→10 (C1-10-5-4) O10→3 (C2-9-10-3) O8→3 O1→8 (C1-10-3-8) O11→8 (C1-8-11-4) O8→7 (C3-8-7-6) S:11-8-7-9
4. MC6 9→7 O11→8 O8→7 (C7-9-11-8) O1→8 (C1-8-11-4) O8→3 (C3-8-7-6) O1→10 O10→3 (C1-10-3-8) O5→10 (C1-10-5-4) O10→9 (C2-9-10-3) S:5-10-9-7
5. MC5 9→2 O9→10 O10→3 (C2-9-10-3) O9→11 (C2-9-11-4) O5→10 O9→7 (C5-10-9-7) O1→10 (C1-10-5-4) O8→3 O1→8 (C1-10-3-8) O11→8 (C1-8-11-4) O8→7 (C3-8-7-6) S:9-11-8-7
6. MC2 7→6 O7→5 (C4-6-7-5) B3→6 (Copy 7) O3→2 (C2-4-6-3) B2→9 (Copy 8) O10→9 O3→10 (C2-9-10-3) O11→9 (C2-9-11-4) O10→5 O7→9 (C5-10-9-7) O10→1 (C1-10-5-4) O3→8 O8→1 (C1-10-3-8) O8→11 (C1-8-11-4) O7→8 (C3-8-7-6) S:7-8-11-9
7. MC8 9→2 O9→11 (C2-9-11-4) B7→9 (Copy 9) O8→11 O7→8 (C7-9-11-8) O8→1 (C1-8-11-4) O3→8 (C3-8-7-6) O10→1 O3→10 (C1-10-3-8) O10→5 (C1-10-5-4) O9→10 (C2-9-10-3) S:7-9-10-5
8. MC9 9→7 O10→5 O9→10 (C5-10-9-7) O10→1 (C1-10-5-4) O3→10 (C2-9-10-3) O3→8 O8→1 (C1-10-3-8) O8→11 (C1-8-11-4) O7→8 (C3-8-7-6) S:9-7-8-11
9. MC7 6→3 O2→3 (C2-4-6-3) O8→3 O7→8 (C3-8-7-6) B8→11 (Copy 10) O8→1 (C1-8-11-4) O7→9 O9→11 (C7-9-11-8) O9→2 (C2-9-11-4) O9→10 O10→3 (C2-9-10-3) O10→1 (C1-10-3-8) O10→5 (C1-10-5-4) S:7-9-10-5
10. MC10 11→8 O1→8 (C1-8-11-4) O1→10 O10→3 (C1-10-3-8) O5→10 (C1-10-5-4) O9→10 O7→9 (C5-10-9-7) O9→2 (C2-9-10-3) O9→11 (C2-9-11-4) S:7-9-11-8
)"},
};

}  // namespace

const corpus_entry& corpus_get(const std::string& name) {
    auto it = corpus().find(name);
    if (it == corpus().end()) throw error(errc::unknown_name, "unknown corpus entry \"" + name + "\"");
    return it->second;
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : corpus()) names.push_back(name);
    return names;
}

const std::string& corpus_entry_text(const std::string& name) {
    static const std::map<std::string, std::string> texts = [] {
        std::map<std::string, std::string> t;
        for (const auto& raw : k_raw_entries) t.emplace(raw.name, raw.edge_list);
        return t;
    }();
    auto it = texts.find(name);
    if (it == texts.end()) throw error(errc::unknown_name, "unknown corpus entry \"" + name + "\"");
    return it->second;
}


std::span<const reference_proof> reference_proofs() {
    static const std::vector<reference_proof> proofs = [] {
        std::vector<reference_proof> v;
        for (const auto& p : k_reference_proofs) v.push_back(p);
        return v;
    }();
    return proofs;
}

}  // namespace wr
