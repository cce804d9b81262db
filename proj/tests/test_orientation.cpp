#include "doctest.h"

#include "wr/corpus.hpp"
#include "wr/orientation.hpp"

#include "test_util.hpp"

using namespace wr;

TEST_CASE("edge state bookkeeping") {
    partial_orientation po(wrt::k3());
    CHECK(po.oriented_count() == 0);
    po.set(edge_id(1, 2), edge_dir::forward);
    CHECK(po.oriented_count() == 1);
    CHECK(po.state(edge_id(1, 2)) == edge_state::forward);
    CHECK_THROWS_AS(po.set(edge_id(1, 2), edge_dir::backward), error);  // re-orientation forbidden
    CHECK_THROWS_AS(po.set(edge_id(1, 9), edge_dir::forward), error);   // unknown edge

    partial_orientation w5(corpus_get("w5").g);
    for (int i = 0; i < 10; ++i) w5.set_index(i, edge_dir::forward);
    CHECK(w5.oriented_count() == 10);
    CHECK(w5.complete());
}

TEST_CASE("directed cycle detection") {
    partial_orientation po(wrt::k3());
    po.set_directed({1, 2});
    po.set_directed({2, 3});
    po.set_directed({3, 1});
    auto rep = detect_violation(po);
    REQUIRE(rep.kind == violation_kind::directed_cycle);
    REQUIRE(rep.cycle.has_value());
    CHECK(rep.cycle->size() == 3);
}

TEST_CASE("minimal shortcut shape") {
    // C4 plus the chord 1-4 as the shortcutting edge
    graph g = wrt::make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    partial_orientation po(g);
    po.set_directed({1, 2});
    po.set_directed({2, 3});
    po.set_directed({3, 4});
    po.set_directed({1, 4});
    auto rep = detect_violation(po);
    REQUIRE(rep.kind == violation_kind::shortcut);
    const auto& w = *rep.shortcut;
    CHECK(w.path == std::vector<int>{1, 2, 3, 4});
    CHECK(w.shortcut_edge == directed_edge{1, 4});
    CHECK((w.missing_pair == std::pair{1, 3} || w.missing_pair == std::pair{2, 4}));
}

TEST_CASE("transitive tournament is clean") {
    partial_orientation po(wrt::k4());
    for (const auto& e : wrt::k4().edges()) po.set(e, edge_dir::forward);  // linear order 1<2<3<4
    auto [ok, rep] = is_semi_transitive(po);
    CHECK(ok);
    CHECK(rep.kind == violation_kind::none);
}

TEST_CASE("bundled reference orientations are semi-transitive") {
    for (const char* name : {"g12prime", "g17prime"}) {
        const auto& entry = corpus_get(name);
        partial_orientation po(entry.g);
        for (const auto& de : *entry.reference_orientation) po.set_directed(de);
        REQUIRE(po.complete());
        CHECK(is_semi_transitive(po).first);

        // reversal keeps semi-transitivity; applying it twice is the identity
        partial_orientation rev = po;
        rev.reverse_all();
        CHECK(is_semi_transitive(rev).first);
        partial_orientation twice = rev;
        twice.reverse_all();
        CHECK(twice == po);
    }
}

TEST_CASE("reversal turns a source into a sink") {
    const auto& g = corpus_get("w5").g;
    partial_orientation po(g);
    for (int w : g.neighbors(1)) po.set_directed({1, w});
    po.reverse_all();
    for (int w : g.neighbors(1)) {
        auto de = po.directed_at(g.require_edge_index(edge_id(1, w)));
        CHECK(de->to == 1);
    }
}

TEST_CASE("no orientation of the wheel W5 is semi-transitive") {
    const auto& g = corpus_get("w5").g;
    violation_scanner scanner(g);
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) CHECK_FALSE(scanner.semi_transitive(mask));
}

TEST_CASE("incomplete orientations are rejected by the final test") {
    partial_orientation po(wrt::k3());
    CHECK_THROWS_AS(is_semi_transitive(po), error);
}

TEST_CASE("detector agrees with the literal-definition oracle") {
    std::mt19937 rng(23);
    for (int it = 0; it < 150; ++it) {
        graph g = wrt::random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.5);
        partial_orientation po(g);
        for (int i = 0; i < g.edge_count(); ++i) {
            int roll = static_cast<int>(rng() % 3);
            if (roll == 0) continue;
            po.set_index(i, roll == 1 ? edge_dir::forward : edge_dir::backward);
        }
        auto rep = detect_violation(po);
        CHECK((rep.kind != violation_kind::none) == wrt::oracle_has_violation(po));
        if (rep.kind == violation_kind::shortcut) {
            // witness sanity: oriented path, oriented shortcutting edge,
            // missing pair on the path
            const auto& w = *rep.shortcut;
            for (size_t j = 0; j + 1 < w.path.size(); ++j) {
                auto de = po.directed_at(g.require_edge_index(edge_id(w.path[j], w.path[j + 1])));
                REQUIRE(de.has_value());
                CHECK(de->from == w.path[j]);
            }
            CHECK_FALSE(g.adjacent(w.missing_pair.first, w.missing_pair.second));
        }
        if (po.complete()) {
            violation_scanner scanner(g);
            std::uint64_t mask = 0;
            for (int i = 0; i < g.edge_count(); ++i)
                if (po.state_at(i) == edge_state::backward) mask |= std::uint64_t{1} << i;
            CHECK(scanner.semi_transitive(mask) == (rep.kind == violation_kind::none));
        }
    }
}

TEST_CASE("violations are monotone under extension") {
    std::mt19937 rng(29);
    int tested = 0;
    while (tested < 60) {
        graph g = wrt::random_graph(rng, 5 + static_cast<int>(rng() % 4), 0.5);
        partial_orientation po(g);
        for (int i = 0; i < g.edge_count(); ++i) {
            int roll = static_cast<int>(rng() % 3);
            if (roll == 0) continue;
            po.set_index(i, roll == 1 ? edge_dir::forward : edge_dir::backward);
        }
        if (detect_violation(po).kind == violation_kind::none) continue;
        ++tested;
        partial_orientation ext = po;
        for (int i = 0; i < g.edge_count(); ++i)
            if (ext.state_at(i) == edge_state::unoriented)
                ext.set_index(i, rng() % 2 ? edge_dir::forward : edge_dir::backward);
        CHECK(detect_violation(ext).kind != violation_kind::none);
    }
}

TEST_CASE("orientation text dump") {
    partial_orientation po(wrt::k3());
    po.set_directed({2, 1});
    po.set_directed({2, 3});
    CHECK(po.to_text() == "2->1\n2->3\n");
}
