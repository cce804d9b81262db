#include "wr/prover.hpp"

#include <algorithm>

#include "wr/propagate.hpp"

namespace wr {

cycle_limits default_cycle_limits(const graph& g) {
    cycle_limits lim;
    if (g.vertex_count() > 12) lim.max_length = 6;
    return lim;
}

partial_orientation source_init(const graph& g, int v) {
    if (!g.has_vertex(v)) throw error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
    partial_orientation po(g);
    for (int w : g.neighbors(v)) po.set_directed({v, w});
    return po;
}

namespace {

// forward/backward counts of a cycle relative to its canonical traversal
struct cycle_tally {
    int with = 0, against = 0, unoriented = 0;
};

cycle_tally tally(const cycle_record& c, const partial_orientation& po) {
    cycle_tally t;
    int m = c.length();
    for (int j = 0; j < m; ++j) {
        int a = c.vertices[static_cast<size_t>(j)];
        int b = c.vertices[static_cast<size_t>((j + 1) % m)];
        auto st = po.state(edge_id(a, b));
        if (st == edge_state::unoriented)
            ++t.unoriented;
        else if ((st == edge_state::forward) == (a < b))
            ++t.with;
        else
            ++t.against;
    }
    return t;
}

// alg1 ranking position: (more cycles first, then lexicographic)
edge_id best_by_global_count(const partial_orientation& po, const cycle_catalog& cat,
                             const std::vector<bool>& bridge) {
    const graph& g = po.host();
    int best = -1;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (bridge[static_cast<size_t>(i)] || po.state_at(i) != edge_state::unoriented) continue;
        if (best < 0 || cat.per_edge_count(i) > cat.per_edge_count(best)) best = i;
    }
    if (best < 0) throw error(errc::no_branchable_edge, "every non-bridge edge is oriented");
    return g.edge_at(best);
}

edge_id best_in_cycle(const cycle_record& c, const partial_orientation& po, const cycle_catalog& cat) {
    const graph& g = po.host();
    int best = -1;
    int m = c.length();
    for (int j = 0; j < m; ++j) {
        edge_id e(c.vertices[static_cast<size_t>(j)], c.vertices[static_cast<size_t>((j + 1) % m)]);
        int i = g.require_edge_index(e);
        if (po.state_at(i) != edge_state::unoriented) continue;
        if (best < 0 || cat.per_edge_count(i) > cat.per_edge_count(best) ||
            (cat.per_edge_count(i) == cat.per_edge_count(best) && g.edge_at(i) < g.edge_at(best)))
            best = i;
    }
    return g.edge_at(best);
}

}  // namespace

edge_id select_branch_edge(const partial_orientation& po, const cycle_catalog& cat, branch_algorithm alg) {
    const graph& g = po.host();
    auto bridge = g.bridge_edges();

    if (alg == branch_algorithm::alg1) return best_by_global_count(po, cat, bridge);

    // alg2/alg3: rank cycles that still have an unoriented edge
    int best_cycle = -1;
    int best_free = 0, best_n = 0;
    for (int k = 0; k < cat.size(); ++k) {
        auto t = tally(cat.cycles()[static_cast<size_t>(k)], po);
        if (t.unoriented == 0) continue;
        int n_same = std::max(t.with, t.against);
        bool better;
        if (best_cycle < 0) {
            better = true;
        } else if (alg == branch_algorithm::alg3 && n_same != best_n) {
            better = n_same > best_n;
        } else {
            better = t.unoriented < best_free;  // tie: canonical order, i.e. keep first
        }
        if (better) {
            best_cycle = k;
            best_free = t.unoriented;
            best_n = n_same;
        }
    }
    if (best_cycle < 0) return best_by_global_count(po, cat, bridge);  // capped catalog fallback
    return best_in_cycle(cat.cycles()[static_cast<size_t>(best_cycle)], po, cat);
}

namespace {

// transcript-side view of a violation terminal
terminator make_terminator(const propagation_outcome& out, const cycle_catalog& cat) {
    terminator term;
    switch (out.terminal) {
        case terminal_kind::shortcut_found:
            term.kind = terminator_kind::shortcut;
            term.vertices = out.shortcut->path;
            break;
        case terminal_kind::directed_cycle_found:
            term.kind = terminator_kind::directed_cycle;
            term.vertices = *out.directed_cycle;
            break;
        case terminal_kind::error_cycle_found:
            term.kind = terminator_kind::error;
            term.vertices = cat.cycles()[static_cast<size_t>(out.error->cycle_index)].vertices;
            break;
        case terminal_kind::quiescent: throw error(errc::internal_inconsistency, "no terminal to render");
    }
    return term;
}

// cheap line self-check before emission: the terminator's claims must hold in
// the state that produced it
void verify_terminator(const terminator& term, const partial_orientation& po) {
    const graph& g = po.host();
    auto oriented_as = [&](int a, int b) {
        auto idx = g.edge_index(edge_id(a, b));
        if (!idx) return false;
        auto de = po.directed_at(*idx);
        return de && de->from == a && de->to == b;
    };
    bool ok = true;
    const auto& vs = term.vertices;
    if (term.kind == terminator_kind::shortcut) {
        for (size_t j = 0; j + 1 < vs.size(); ++j) ok = ok && oriented_as(vs[j], vs[j + 1]);
        ok = ok && vs.size() >= 3 && oriented_as(vs.front(), vs.back());
    } else if (term.kind == terminator_kind::directed_cycle) {
        for (size_t j = 0; j < vs.size(); ++j) ok = ok && oriented_as(vs[j], vs[(j + 1) % vs.size()]);
    } else {
        int open = 0;
        for (size_t j = 0; j < vs.size(); ++j)
            if (po.state(edge_id(vs[j], vs[(j + 1) % vs.size()])) == edge_state::unoriented) ++open;
        ok = vs.size() >= 4 && open == 1;
    }
    if (!ok) throw error(errc::internal_inconsistency, "transcript line failed self-check before emission");
}

}  // namespace

prove_result prove(const graph& g, const search_config& cfg) {
    if (!g.is_connected())
        throw error(errc::malformed_input, "prove requires a connected graph; split components first");
    if (cfg.source_vertex && cfg.first_edge)
        throw error(errc::malformed_input,
                    "a first-edge override is unsound under a source assumption; choose one");

    cycle_limits lim = default_cycle_limits(g);
    if (cfg.max_cycle_length) lim.max_length = cfg.max_cycle_length;
    cycle_catalog cat = enumerate_cycles(g, lim);
    auto bridge = g.bridge_edges();

    prove_result result;
    proof_transcript transcript;
    transcript.source_vertex = cfg.source_vertex;

    auto has_branchable = [&](const partial_orientation& po) {
        for (int i = 0; i < g.edge_count(); ++i)
            if (!bridge[static_cast<size_t>(i)] && po.state_at(i) == edge_state::unoriented) return true;
        return false;
    };

    // Copy 1
    partial_orientation current(g);
    proof_line line;
    if (cfg.source_vertex) {
        current = source_init(g, *cfg.source_vertex);
    } else if (has_branchable(current)) {
        edge_id first = cfg.first_edge ? *cfg.first_edge
                                       : select_branch_edge(current, cat, cfg.algorithm);
        if (!g.edge_index(first))
            throw error(errc::unknown_edge,
                        "no edge " + std::to_string(first.u) + "-" + std::to_string(first.v));
        current.set(first, edge_dir::forward);
        line.instructions.push_back(instr_initial_edge{{first.u, first.v}});
    }

    std::vector<search_state> pending;  // LIFO
    int next_copy_id = 2;
    result.stats.copies = 1;

    for (;;) {
        auto outcome = propagate_fixpoint(current, cat);
        result.stats.forcings += outcome.steps.size();
        for (const auto& step : outcome.steps) {
            instr_orient o;
            o.edges = step.forced;
            o.cycle = cat.cycles()[static_cast<size_t>(step.cycle_index)].vertices;
            line.instructions.push_back(std::move(o));
        }

        if (outcome.terminal != terminal_kind::quiescent) {
            line.term = make_terminator(outcome, cat);
            verify_terminator(line.term, current);
            transcript.lines.push_back(std::move(line));
            line = proof_line{};
            if (pending.empty()) {
                result.representable = false;
                result.stats.lines = transcript.lines.size();
                result.transcript = std::move(transcript);
                return result;
            }
            search_state next = std::move(pending.back());
            pending.pop_back();
            line.instructions.push_back(instr_move_to_copy{next.copy_id, *next.branch_edge});
            current = std::move(next.po);
            continue;
        }

        if (!has_branchable(current)) {
            // cycle structure fully oriented without violation: bridges go
            // low -> high and cannot create a directed cycle or shortcut
            for (int i = 0; i < g.edge_count(); ++i)
                if (current.state_at(i) == edge_state::unoriented) current.set_index(i, edge_dir::forward);
            auto [ok, rep] = is_semi_transitive(current);
            if (!ok) throw error(errc::internal_inconsistency, "completed orientation failed verification");
            result.representable = true;
            result.orientation = std::move(current);
            result.stats.lines = transcript.lines.size();
            return result;
        }

        edge_id e = select_branch_edge(current, cat, cfg.algorithm);
        if (result.stats.copies + 1 > cfg.copy_limit)
            throw error(errc::copy_limit_exceeded,
                        "copy limit of " + std::to_string(cfg.copy_limit) + " exceeded");
        search_state clone{next_copy_id++, current, directed_edge{e.v, e.u}};
        clone.po.set(e, edge_dir::backward);
        pending.push_back(std::move(clone));
        result.stats.copies++;
        current.set(e, edge_dir::forward);
        line.instructions.push_back(instr_branch{{e.u, e.v}, next_copy_id - 1});
    }
}

}  // namespace wr
