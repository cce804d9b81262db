#include "doctest.h"

#include <algorithm>
#include <set>

#include "wr/corpus.hpp"
#include "wr/cycles.hpp"

#include "test_util.hpp"

using namespace wr;

namespace {

// independent cycle oracle: for every vertex subset, count Hamiltonian rings
// of the induced subgraph by checking all permutations, deduplicated by the
// min-first / smaller-second-vertex rule
std::vector<std::vector<int>> oracle_cycles(const graph& g, int max_len) {
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    std::vector<int> verts;
    auto consider = [&](const std::vector<int>& sub) {
        std::vector<int> perm(sub.begin() + 1, sub.end());
        std::sort(perm.begin(), perm.end());
        do {
            if (perm.front() > perm.back()) continue;
            std::vector<int> seq{sub[0]};
            seq.insert(seq.end(), perm.begin(), perm.end());
            bool ok = true;
            for (size_t i = 0; i + 1 < seq.size() && ok; ++i) ok = g.adjacent(seq[i], seq[i + 1]);
            if (ok && g.adjacent(seq.back(), seq.front())) out.push_back(seq);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    auto rec = [&](auto&& self, int from, int want) -> void {
        if (static_cast<int>(verts.size()) == want) {
            consider(verts);
            return;
        }
        for (int v = from; v <= n; ++v) {
            verts.push_back(v);
            self(self, v + 1, want);
            verts.pop_back();
        }
    };
    for (int size = 3; size <= std::min(n, max_len); ++size) rec(rec, 1, size);
    return out;
}

}  // namespace

TEST_CASE("small catalogs") {
    auto k3 = enumerate_cycles(wrt::k3());
    REQUIRE(k3.size() == 1);
    CHECK(k3.cycles()[0].vertices == std::vector<int>{1, 2, 3});
    CHECK(k3.cycles()[0].induces_clique);
    for (int i = 0; i < 3; ++i) CHECK(k3.per_edge_count(i) == 1);

    auto c4 = enumerate_cycles(wrt::c4());
    REQUIRE(c4.size() == 1);
    CHECK(c4.cycles()[0].length() == 4);
    CHECK_FALSE(c4.cycles()[0].induces_clique);
    for (int i = 0; i < 4; ++i) CHECK(c4.per_edge_count(i) == 1);

    auto p3 = enumerate_cycles(wrt::p3());
    CHECK(p3.size() == 0);
    for (int i = 0; i < 2; ++i) CHECK(p3.per_edge_count(i) == 0);
}

TEST_CASE("wheel W5 catalog matches the independent enumeration") {
    const auto& w5 = corpus_get("w5").g;
    auto cat = enumerate_cycles(w5);
    auto oracle = oracle_cycles(w5, 6);
    CHECK(cat.size() == static_cast<int>(oracle.size()));
    CHECK(cat.size() == 21);
    int long_cycles = 0;
    for (const auto& c : cat.cycles())
        if (c.length() >= 4) ++long_cycles;
    CHECK(long_cycles == 16);

    // catalog records and oracle rings agree exactly
    std::set<std::vector<int>> a, b;
    for (const auto& c : cat.cycles()) a.insert(c.vertices);
    for (const auto& c : oracle) b.insert(c);
    CHECK(a == b);

    // rim edges lie on 11 cycles, spokes on 8
    for (int i = 0; i < w5.edge_count(); ++i) {
        edge_id e = w5.edge_at(i);
        CHECK(cat.per_edge_count(i) == (e.u == 1 ? 8 : 11));
    }
}

TEST_CASE("catalog invariants on random graphs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        graph g = wrt::random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.45);
        auto cat = enumerate_cycles(g);
        auto oracle = oracle_cycles(g, g.vertex_count());
        REQUIRE(cat.size() == static_cast<int>(oracle.size()));

        std::set<std::vector<int>> seen;
        std::vector<int> counts(static_cast<size_t>(g.edge_count()), 0);
        int prev_len = 0;
        std::vector<int> prev_seq;
        for (const auto& c : cat.cycles()) {
            // closed walk of adjacent, distinct vertices
            std::set<int> uniq(c.vertices.begin(), c.vertices.end());
            CHECK(uniq.size() == c.vertices.size());
            for (size_t j = 0; j < c.vertices.size(); ++j)
                CHECK(g.adjacent(c.vertices[j], c.vertices[(j + 1) % c.vertices.size()]));
            // canonical form: min first, smaller second direction
            CHECK(c.vertices[0] == *std::min_element(c.vertices.begin(), c.vertices.end()));
            CHECK(c.vertices[1] < c.vertices.back());
            CHECK(c.induces_clique == is_clique(g, c.vertices));
            CHECK(seen.insert(c.vertices).second);
            // deterministic order: by (length, sequence)
            if (prev_len == c.length()) CHECK(prev_seq < c.vertices);
            CHECK(prev_len <= c.length());
            prev_len = c.length();
            prev_seq = c.vertices;
            for (size_t j = 0; j < c.vertices.size(); ++j)
                counts[static_cast<size_t>(g.require_edge_index(
                    edge_id(c.vertices[j], c.vertices[(j + 1) % c.vertices.size()])))]++;
        }
        // per-edge counts agree with a direct scan; zero-count edges are bridges
        auto bridges = g.bridge_edges();
        for (int i = 0; i < g.edge_count(); ++i) {
            CHECK(cat.per_edge_count(i) == counts[static_cast<size_t>(i)]);
            CHECK((cat.per_edge_count(i) == 0) == bridges[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("length caps and the overflow guard") {
    const auto& w5 = corpus_get("w5").g;
    CHECK(enumerate_cycles(w5, {3, 500000}).size() == 5);
    CHECK(enumerate_cycles(w5, {4, 500000}).size() == 10);
    CHECK(enumerate_cycles(w5, {5, 500000}).size() == 16);
    CHECK(enumerate_cycles(w5, {6, 500000}).size() == 21);
    CHECK_THROWS_AS(enumerate_cycles(w5, {std::nullopt, 5}), error);
    CHECK_THROWS_AS(enumerate_cycles(w5, {2, 500000}), error);
}

TEST_CASE("catalog text dump") {
    auto cat = enumerate_cycles(wrt::c4());
    CHECK(dump_catalog(cat) == "4: 1-2-3-4 nonclique\n");
    auto k3cat = enumerate_cycles(wrt::k3());
    CHECK(dump_catalog(k3cat) == "3: 1-2-3 clique\n");
}

TEST_CASE("edge_cycle_counts gives the canonical edge order") {
    const auto& w5 = corpus_get("w5").g;
    auto cat = enumerate_cycles(w5);
    auto counts = edge_cycle_counts(cat);
    REQUIRE(counts.size() == 10);
    CHECK(counts.front().first == edge_id(1, 2));
    CHECK(counts.front().second == 8);
    CHECK(std::is_sorted(counts.begin(), counts.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; }));
}
