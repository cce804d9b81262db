#include "doctest.h"

#include "wr/corpus.hpp"
#include "wr/graph_io.hpp"
#include "wr/orientation.hpp"

#include "test_util.hpp"

using namespace wr;

TEST_CASE("edge-list parsing") {
    graph k3 = parse_graph("3 3\n1 2\n2 3\n1 3\n", graph_format::edge_list);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == wrt::k3());

    graph single = parse_graph("2 1\n1 2", graph_format::edge_list);
    CHECK(single.vertex_count() == 2);
    CHECK(single.edge_count() == 1);

    // comments and blank lines are skipped
    graph commented = parse_graph("# a graph\n\n2 1\n# edge\n1 2\n", graph_format::edge_list);
    CHECK(commented == single);
}

TEST_CASE("edge-list parse errors carry positions") {
    CHECK_THROWS_AS(parse_graph("x y\n", graph_format::edge_list), parse_error);
    CHECK_THROWS_AS(parse_graph("2 1\n1 3\n", graph_format::edge_list), parse_error);  // out of range
    CHECK_THROWS_AS(parse_graph("3 2\n1 2\n2 1\n", graph_format::edge_list), parse_error);  // duplicate
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n", graph_format::edge_list), parse_error);  // self-loop
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n", graph_format::edge_list), parse_error);  // missing edge

    try {
        parse_graph("3 2\n1 2\n3 5\n", graph_format::edge_list);
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("graph6 round trip and known encodings") {
    CHECK(parse_graph("Bw", graph_format::graph6) == wrt::k3());
    CHECK(serialize_graph(wrt::k3(), graph_format::graph6) == "Bw\n");
    CHECK(parse_graph(">>graph6<<Bw\n", graph_format::graph6) == wrt::k3());
    CHECK_THROWS_AS(parse_graph("", graph_format::graph6), parse_error);
    CHECK_THROWS_AS(parse_graph("B", graph_format::graph6), parse_error);  // truncated body

    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        graph g = wrt::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.4);
        CHECK(parse_graph(serialize_graph(g, graph_format::graph6), graph_format::graph6) == g);
        CHECK(parse_graph(serialize_graph(g, graph_format::edge_list), graph_format::edge_list) == g);
    }
}

TEST_CASE("induced subgraphs") {
    auto single = induced_subgraph(wrt::k3(), {1, 2});
    CHECK(single.g.edge_count() == 1);
    CHECK(single.label_map == std::vector<int>{1, 2});

    // the seven-vertex catalog entry 1 restricted to 1..6 is the wheel W5
    auto w5 = induced_subgraph(corpus_get("g7-1").g, {1, 2, 3, 4, 5, 6});
    CHECK(w5.g == corpus_get("w5").g);

    // wheel minus its hub is the rim cycle C5
    auto rim = induced_subgraph(corpus_get("w5").g, {2, 3, 4, 5, 6});
    CHECK(rim.g == wrt::c5());

    // full vertex set is the identity
    auto all = induced_subgraph(corpus_get("w5").g, {1, 2, 3, 4, 5, 6});
    CHECK(all.g == corpus_get("w5").g);

    CHECK_THROWS_AS(induced_subgraph(wrt::k3(), {}), error);
    CHECK_THROWS_AS(induced_subgraph(wrt::k3(), {9}), error);
}

TEST_CASE("is_clique") {
    CHECK(is_clique(wrt::k3(), {1, 2, 3}));
    CHECK_FALSE(is_clique(wrt::c4(), {1, 2, 3, 4}));
    CHECK(is_clique(corpus_get("w5").g, {1, 2, 3}));  // hub plus adjacent rim pair
    CHECK(is_clique(wrt::k3(), {2}));
    CHECK(is_clique(wrt::k3(), {}));
}

TEST_CASE("bridges and components") {
    auto b = wrt::p3().bridge_edges();
    CHECK(std::count(b.begin(), b.end(), true) == 2);
    auto bk = wrt::k3().bridge_edges();
    CHECK(std::count(bk.begin(), bk.end(), true) == 0);

    graph two = wrt::make_graph(5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(two.is_connected());
    CHECK(two.components().size() == 2);
    CHECK(wrt::k3().is_connected());
}

TEST_CASE("corpus entries have the documented shapes") {
    CHECK(corpus_get("shrikhande").g.vertex_count() == 16);
    CHECK(corpus_get("shrikhande").g.edge_count() == 48);
    CHECK(corpus_get("clebsch").g.vertex_count() == 16);
    CHECK(corpus_get("clebsch").g.edge_count() == 40);
    CHECK(corpus_get("w5").g.vertex_count() == 6);
    CHECK(corpus_get("w5").g.edge_count() == 10);
    CHECK(corpus_get("sub-S").g.vertex_count() == 9);
    CHECK(corpus_get("sub-S").g.edge_count() == 17);
    CHECK(corpus_get("sub-S-relabeled").g.edge_count() == 17);
    CHECK(corpus_get("sub-C").g.vertex_count() == 11);
    CHECK(corpus_get("sub-C").g.edge_count() == 20);
    CHECK(corpus_get("sub-C-relabeled").g == corpus_get("sub-C").g);
    for (int k = 1; k <= 25; ++k) {
        const auto& e = corpus_get("g7-" + std::to_string(k));
        CHECK(e.g.vertex_count() == 7);
        CHECK(e.expected_status == corpus_status::non_word_representable);
        CHECK(e.g.is_connected());
    }
    CHECK(corpus_get("g12prime").expected_status == corpus_status::word_representable);
    CHECK(corpus_get("g12prime").reference_orientation->size() == 12);
    CHECK(corpus_get("g17prime").reference_orientation->size() == 16);
    CHECK(corpus_names().size() == 34);
    CHECK_THROWS_AS(corpus_get("nope"), error);
}

TEST_CASE("the two prime variants differ from their catalog entries as documented") {
    // g12prime is catalog entry 12 minus edge 1-3; g17prime is entry 17 plus 1-7
    const auto& g12 = corpus_get("g7-12").g;
    const auto& g12p = corpus_get("g12prime").g;
    CHECK(g12.edge_count() == g12p.edge_count() + 1);
    for (const auto& e : g12p.edges()) CHECK(g12.edge_index(e).has_value());
    CHECK_FALSE(g12p.edge_index(edge_id(1, 3)).has_value());

    const auto& g17 = corpus_get("g7-17").g;
    const auto& g17p = corpus_get("g17prime").g;
    CHECK(g17p.edge_count() == g17.edge_count() + 1);
    for (const auto& e : g17.edges()) CHECK(g17p.edge_index(e).has_value());
    CHECK(g17p.edge_index(edge_id(1, 7)).has_value());
}

TEST_CASE("subgraph corpus entries are induced subgraphs of their hosts") {
    // sub-S: Shrikhande vertices 4,6,8,11,12,13,14,15,16, renumbered ascending
    auto s = induced_subgraph(corpus_get("shrikhande").g, {4, 6, 8, 11, 12, 13, 14, 15, 16});
    CHECK(s.g == corpus_get("sub-S").g);
    // sub-C: Clebsch vertices 1..6, 8..12
    auto c = induced_subgraph(corpus_get("clebsch").g, {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12});
    CHECK(c.g == corpus_get("sub-C").g);
}

TEST_CASE("bundled data files match the embedded corpus byte for byte") {
    for (const auto& name : corpus_names())
        CHECK(wrt::read_file(wrt::data_path("corpus/" + name + ".txt")) == corpus_entry_text(name));
    for (const auto& p : reference_proofs())
        CHECK(wrt::read_file(wrt::data_path("proofs/" + p.name + ".txt")) == p.text);
}
