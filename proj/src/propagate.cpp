#include "wr/propagate.hpp"

namespace wr {

namespace {

enum class slot_state : std::uint8_t { unoriented, with_traversal, against_traversal };

// slot j of the traversal joins seq[j] -> seq[j+1 mod m]
slot_state classify(const partial_orientation& po, int from, int to) {
    auto st = po.state(edge_id(from, to));
    if (st == edge_state::unoriented) return slot_state::unoriented;
    bool forward_is_with = from < to;  // canonical forward orients u -> v, u < v
    bool with = (st == edge_state::forward) == forward_is_with;
    return with ? slot_state::with_traversal : slot_state::against_traversal;
}

}  // namespace

cycle_analysis cycle_forcing(const cycle_catalog& cat, int cycle_index, const partial_orientation& po) {
    const cycle_record& c = cat.cycles()[static_cast<size_t>(cycle_index)];
    const int m = c.length();

    int with = 0, against = 0, free_count = 0;
    static thread_local std::vector<slot_state> slots;
    slots.assign(static_cast<size_t>(m), slot_state::unoriented);
    for (int j = 0; j < m; ++j) {
        int a = c.vertices[static_cast<size_t>(j)];
        int b = c.vertices[static_cast<size_t>((j + 1) % m)];
        slots[static_cast<size_t>(j)] = classify(po, a, b);
        switch (slots[static_cast<size_t>(j)]) {
            case slot_state::unoriented: ++free_count; break;
            case slot_state::with_traversal: ++with; break;
            case slot_state::against_traversal: ++against; break;
        }
    }

    // analyse one rotational direction; "majority" edges run with it
    auto analyse = [&](bool reversed) -> cycle_analysis {
        int maj = reversed ? against : with;
        int min_dir = reversed ? with : against;
        auto forced_dir = [&](int j) -> directed_edge {
            // forced opposite to the majority direction
            int a = c.vertices[static_cast<size_t>(j)];
            int b = c.vertices[static_cast<size_t>((j + 1) % m)];
            return reversed ? directed_edge{a, b} : directed_edge{b, a};
        };
        cycle_analysis res;
        if (m == 3) {
            // acyclicity in a triangle: two edges one way force the third
            if (maj == 2 && free_count == 1) {
                forcing_step step;
                step.kind = forcing_kind::single_o;
                step.cycle_index = cycle_index;
                for (int j = 0; j < m; ++j)
                    if (slots[static_cast<size_t>(j)] == slot_state::unoriented)
                        step.forced.push_back(forced_dir(j));
                res.step = std::move(step);
            }
            return res;
        }
        if (c.induces_clique) return res;
        if (maj == m - 1 && free_count == 1) {
            int j = 0;
            while (slots[static_cast<size_t>(j)] != slot_state::unoriented) ++j;
            res.error = error_cycle{cycle_index, edge_id(c.vertices[static_cast<size_t>(j)],
                                                         c.vertices[static_cast<size_t>((j + 1) % m)])};
            return res;
        }
        if (maj == m - 2 && free_count >= 1 && free_count + min_dir == 2) {
            forcing_step step;
            step.kind = free_count == 2 ? forcing_kind::double_o : forcing_kind::single_o;
            step.cycle_index = cycle_index;
            for (int j = 0; j < m; ++j)
                if (slots[static_cast<size_t>(j)] == slot_state::unoriented)
                    step.forced.push_back(forced_dir(j));
            res.step = std::move(step);
        }
        return res;
    };

    auto fwd = analyse(false);
    if (fwd.step || fwd.error) return fwd;
    return analyse(true);
}

propagation_outcome propagate_fixpoint(partial_orientation& po, const cycle_catalog& cat) {
    propagation_outcome out;

    auto record_violation = [&](violation_report&& rep) {
        if (rep.kind == violation_kind::directed_cycle) {
            out.terminal = terminal_kind::directed_cycle_found;
            out.directed_cycle = std::move(rep.cycle);
            return true;
        }
        if (rep.kind == violation_kind::shortcut) {
            out.terminal = terminal_kind::shortcut_found;
            out.shortcut = std::move(rep.shortcut);
            return true;
        }
        return false;
    };

    // entry check: branching or external setup may already have violated
    if (record_violation(detect_violation(po))) return out;

    for (;;) {
        bool fired = false;
        for (int k = 0; k < cat.size() && !fired; ++k) {
            auto analysis = cycle_forcing(cat, k, po);
            if (analysis.error) {
                out.terminal = terminal_kind::error_cycle_found;
                out.error = analysis.error;
                return out;
            }
            if (!analysis.step) continue;
            fired = true;
            // apply the whole step, checking after every edge; the first
            // violation becomes the terminal witness once the step is done
            std::optional<violation_report> first_violation;
            for (const auto& de : analysis.step->forced) {
                po.set_directed(de);
                if (!first_violation) {
                    auto rep = detect_violation(po);
                    if (rep.kind != violation_kind::none) first_violation = std::move(rep);
                }
            }
            out.steps.push_back(std::move(*analysis.step));
            if (first_violation && record_violation(std::move(*first_violation))) return out;
        }
        if (!fired) {
            out.terminal = terminal_kind::quiescent;
            return out;
        }
    }
}

}  // namespace wr
