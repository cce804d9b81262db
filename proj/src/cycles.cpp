#include "wr/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace wr {

cycle_catalog::cycle_catalog(const graph& g, std::vector<cycle_record> cycles, std::optional<int> cap)
    : host_(&g), cycles_(std::move(cycles)), cap_(cap) {
    edge_counts_.assign(static_cast<size_t>(g.edge_count()), 0);
    slot_offsets_.reserve(cycles_.size() + 1);
    slot_offsets_.push_back(0);
    for (const auto& c : cycles_) {
        int m = c.length();
        for (int j = 0; j < m; ++j) {
            int ei = g.require_edge_index(edge_id(c.vertices[static_cast<size_t>(j)],
                                                  c.vertices[static_cast<size_t>((j + 1) % m)]));
            slot_data_.push_back(ei);
            edge_counts_[static_cast<size_t>(ei)]++;
        }
        slot_offsets_.push_back(static_cast<int>(slot_data_.size()));
    }
}

std::span<const int> cycle_catalog::edge_slots(int cycle_index) const {
    int a = slot_offsets_[static_cast<size_t>(cycle_index)];
    int b = slot_offsets_[static_cast<size_t>(cycle_index) + 1];
    return {slot_data_.data() + a, static_cast<size_t>(b - a)};
}

cycle_catalog enumerate_cycles(const graph& g, cycle_limits lim) {
    if (lim.max_length && *lim.max_length < 3)
        throw error(errc::malformed_input, "cycle length cap must be at least 3");
    int cap = lim.max_length ? *lim.max_length : g.vertex_count();

    std::vector<cycle_record> found;
    std::vector<int> path;
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()) + 1, 0);

    // Each simple cycle is produced exactly once: the path starts at the
    // cycle's minimum vertex and the second vertex is smaller than the last.
    auto emit = [&](const std::vector<int>& cyc) {
        if (found.size() >= lim.max_cycles)
            throw error(errc::catalog_overflow,
                        "cycle catalog exceeds " + std::to_string(lim.max_cycles) +
                            " records; set a max_length cap");
        cycle_record rec;
        rec.vertices = cyc;
        rec.induces_clique = is_clique(g, cyc);
        found.push_back(std::move(rec));
    };

    for (int s = 1; s <= g.vertex_count(); ++s) {
        path.assign(1, s);
        on_path[static_cast<size_t>(s)] = 1;
        // iterative DFS over neighbor positions
        std::vector<size_t> next_pos{0};
        while (!path.empty()) {
            int v = path.back();
            const auto& nb = g.neighbors(v);
            if (next_pos.back() < nb.size()) {
                int w = nb[next_pos.back()++];
                if (w <= s) {
                    if (w == s && path.size() >= 3 && path[1] < path.back()) emit(path);
                    continue;
                }
                if (on_path[static_cast<size_t>(w)] || static_cast<int>(path.size()) >= cap) continue;
                path.push_back(w);
                on_path[static_cast<size_t>(w)] = 1;
                next_pos.push_back(0);
            } else {
                on_path[static_cast<size_t>(path.back())] = 0;
                path.pop_back();
                next_pos.pop_back();
            }
        }
        on_path[static_cast<size_t>(s)] = 0;
    }

    std::sort(found.begin(), found.end(), [](const cycle_record& a, const cycle_record& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return cycle_catalog(g, std::move(found), lim.max_length);
}

std::string dump_catalog(const cycle_catalog& cat) {
    std::ostringstream os;
    for (const auto& c : cat.cycles()) {
        os << c.length() << ':';
        for (size_t i = 0; i < c.vertices.size(); ++i) os << (i ? "-" : " ") << c.vertices[i];
        os << (c.induces_clique ? " clique" : " nonclique") << '\n';
    }
    return os.str();
}

std::vector<std::pair<edge_id, int>> edge_cycle_counts(const cycle_catalog& cat) {
    std::vector<std::pair<edge_id, int>> out;
    const auto& g = cat.host();
    out.reserve(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) out.emplace_back(g.edge_at(i), cat.per_edge_count(i));
    return out;
}

}  // namespace wr
