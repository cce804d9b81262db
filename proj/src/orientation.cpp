#include "wr/orientation.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace wr {

void partial_orientation::set_index(int edge_index, edge_dir d) {
    auto& s = st_[static_cast<size_t>(edge_index)];
    if (s != edge_state::unoriented) {
        auto e = host_->edge_at(edge_index);
        throw error(errc::already_oriented,
                    "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is already oriented");
    }
    s = d == edge_dir::forward ? edge_state::forward : edge_state::backward;
    ++oriented_;
}

void partial_orientation::set_directed(directed_edge de) {
    edge_id e = de.undirected();
    set(e, de.from == e.u ? edge_dir::forward : edge_dir::backward);
}

std::optional<directed_edge> partial_orientation::directed_at(int edge_index) const {
    edge_state s = st_[static_cast<size_t>(edge_index)];
    if (s == edge_state::unoriented) return std::nullopt;
    edge_id e = host_->edge_at(edge_index);
    if (s == edge_state::forward) return directed_edge{e.u, e.v};
    return directed_edge{e.v, e.u};
}

void partial_orientation::reverse_all() {
    for (auto& s : st_) {
        if (s == edge_state::forward)
            s = edge_state::backward;
        else if (s == edge_state::backward)
            s = edge_state::forward;
    }
}

std::string partial_orientation::to_text() const {
    std::ostringstream os;
    for (int i = 0; i < host_->edge_count(); ++i)
        if (auto de = directed_at(i)) os << de->from << "->" << de->to << '\n';
    return os.str();
}

namespace {

struct oriented_view {
    int n;
    std::vector<std::vector<int>> out;  // 1-based

    explicit oriented_view(const partial_orientation& po) : n(po.host().vertex_count()) {
        out.assign(static_cast<size_t>(n) + 1, {});
        for (int i = 0; i < po.host().edge_count(); ++i)
            if (auto de = po.directed_at(i)) out[static_cast<size_t>(de->from)].push_back(de->to);
    }
};

// returns a directed cycle v0 -> ... -> vk -> v0 if one exists
std::optional<std::vector<int>> find_directed_cycle(const oriented_view& g) {
    std::vector<char> color(static_cast<size_t>(g.n) + 1, 0);  // 0 white, 1 gray, 2 black
    std::vector<int> parent(static_cast<size_t>(g.n) + 1, 0);
    struct frame {
        int v;
        size_t next;
    };
    for (int root = 1; root <= g.n; ++root) {
        if (color[static_cast<size_t>(root)] != 0) continue;
        std::vector<frame> stack{{root, 0}};
        color[static_cast<size_t>(root)] = 1;
        while (!stack.empty()) {
            frame& f = stack.back();
            const auto& nb = g.out[static_cast<size_t>(f.v)];
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (color[static_cast<size_t>(w)] == 1) {
                    // back edge f.v -> w: cycle w -> ... -> f.v -> w
                    std::vector<int> cyc{w};
                    for (size_t i = 0; i < stack.size(); ++i)
                        if (stack[i].v == w) {
                            for (size_t j = i + 1; j < stack.size(); ++j) cyc.push_back(stack[j].v);
                            break;
                        }
                    return cyc;
                }
                if (color[static_cast<size_t>(w)] == 0) {
                    color[static_cast<size_t>(w)] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[static_cast<size_t>(f.v)] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

// all-pairs shortest path lengths over oriented edges; -1 unreachable
std::vector<std::vector<int>> bfs_distances(const oriented_view& g) {
    std::vector<std::vector<int>> dist(static_cast<size_t>(g.n) + 1,
                                       std::vector<int>(static_cast<size_t>(g.n) + 1, -1));
    for (int s = 1; s <= g.n; ++s) {
        auto& d = dist[static_cast<size_t>(s)];
        d[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.out[static_cast<size_t>(v)])
                if (d[static_cast<size_t>(w)] < 0) {
                    d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

// shortest directed path a..b recovered from the distance table
std::vector<int> shortest_path(const oriented_view& g, const std::vector<std::vector<int>>& dist, int a, int b) {
    std::vector<int> path{a};
    int v = a;
    while (v != b) {
        for (int w : g.out[static_cast<size_t>(v)]) {
            if (dist[static_cast<size_t>(a)][static_cast<size_t>(w)] ==
                    dist[static_cast<size_t>(a)][static_cast<size_t>(v)] + 1 &&
                dist[static_cast<size_t>(w)][static_cast<size_t>(b)] >= 0 &&
                dist[static_cast<size_t>(a)][static_cast<size_t>(w)] +
                        dist[static_cast<size_t>(w)][static_cast<size_t>(b)] ==
                    dist[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
                path.push_back(w);
                v = w;
                break;
            }
        }
    }
    return path;
}

}  // namespace

violation_report detect_violation(const partial_orientation& po) {
    const graph& g = po.host();
    oriented_view view(po);
    if (auto cyc = find_directed_cycle(view)) {
        violation_report r;
        r.kind = violation_kind::directed_cycle;
        r.cycle = std::move(*cyc);
        return r;
    }
    auto dist = bfs_distances(view);
    auto reach = [&](int a, int b) { return dist[static_cast<size_t>(a)][static_cast<size_t>(b)] >= 0; };

    // non-edges of the host, canonical order
    std::vector<std::pair<int, int>> nonedges;
    for (int x = 1; x <= g.vertex_count(); ++x)
        for (int y = x + 1; y <= g.vertex_count(); ++y)
            if (!g.adjacent(x, y)) nonedges.emplace_back(x, y);

    // shortest witness over all (edge, pair, ordering) combinations
    int best_len = -1;
    directed_edge best_edge{};
    std::pair<int, int> best_pair{};
    int best_x = 0, best_y = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto de = po.directed_at(i);
        if (!de) continue;
        int u = de->from, v = de->to;
        for (const auto& [px, py] : nonedges) {
            for (auto [x, y] : {std::pair{px, py}, std::pair{py, px}}) {
                if (!(reach(u, x) && reach(x, y) && reach(y, v))) continue;
                int len = dist[static_cast<size_t>(u)][static_cast<size_t>(x)] +
                          dist[static_cast<size_t>(x)][static_cast<size_t>(y)] +
                          dist[static_cast<size_t>(y)][static_cast<size_t>(v)];
                if (best_len < 0 || len < best_len) {
                    best_len = len;
                    best_edge = *de;
                    best_pair = {px, py};
                    best_x = x;
                    best_y = y;
                }
            }
        }
    }
    violation_report r;
    if (best_len < 0) return r;
    shortcut_witness w;
    w.shortcut_edge = best_edge;
    w.missing_pair = best_pair;
    auto p1 = shortest_path(view, dist, best_edge.from, best_x);
    auto p2 = shortest_path(view, dist, best_x, best_y);
    auto p3 = shortest_path(view, dist, best_y, best_edge.to);
    w.path = p1;
    w.path.insert(w.path.end(), p2.begin() + 1, p2.end());
    w.path.insert(w.path.end(), p3.begin() + 1, p3.end());
    r.kind = violation_kind::shortcut;
    r.shortcut = std::move(w);
    return r;
}

std::pair<bool, violation_report> is_semi_transitive(const partial_orientation& po) {
    if (!po.complete())
        throw error(errc::incomplete_orientation,
                    "orientation is incomplete (" + std::to_string(po.oriented_count()) + " of " +
                        std::to_string(po.host().edge_count()) + " edges oriented)");
    auto rep = detect_violation(po);
    return {rep.kind == violation_kind::none, std::move(rep)};
}

violation_scanner::violation_scanner(const graph& g)
    : host_(&g), n_(g.vertex_count()), m_(g.edge_count()) {
    if (n_ > 32 || m_ > 64)
        throw error(errc::too_many_edges, "violation_scanner supports at most 32 vertices / 64 edges");
    for (const auto& e : g.edges()) ends_.emplace_back(e.u - 1, e.v - 1);
    adj_.assign(static_cast<size_t>(n_), 0);
    for (const auto& [u, v] : ends_) {
        adj_[static_cast<size_t>(u)] |= 1u << v;
        adj_[static_cast<size_t>(v)] |= 1u << u;
    }
    for (int x = 0; x < n_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (!(adj_[static_cast<size_t>(x)] >> y & 1u)) nonedges_.emplace_back(x, y);
}

bool violation_scanner::semi_transitive(std::uint64_t dirmask) const {
    std::uint32_t out[32] = {};
    for (int i = 0; i < m_; ++i) {
        auto [u, v] = ends_[static_cast<size_t>(i)];
        if (dirmask >> i & 1u)
            out[v] |= 1u << u;
        else
            out[u] |= 1u << v;
    }
    // Kahn topological order
    int indeg[32] = {};
    for (int v = 0; v < n_; ++v) {
        std::uint32_t o = out[v];
        while (o) {
            indeg[__builtin_ctz(o)]++;
            o &= o - 1;
        }
    }
    int topo[32], tn = 0, qn = 0;
    int q[32];
    for (int v = 0; v < n_; ++v)
        if (!indeg[v]) q[qn++] = v;
    while (qn) {
        int v = q[--qn];
        topo[tn++] = v;
        std::uint32_t o = out[v];
        while (o) {
            int w = __builtin_ctz(o);
            o &= o - 1;
            if (--indeg[w] == 0) q[qn++] = w;
        }
    }
    if (tn != n_) return false;  // directed cycle
    std::uint32_t reach[32];     // strict reachability
    for (int i = tn - 1; i >= 0; --i) {
        int v = topo[i];
        std::uint32_t r = 0, o = out[v];
        while (o) {
            int w = __builtin_ctz(o);
            o &= o - 1;
            r |= (1u << w) | reach[w];
        }
        reach[v] = r;
    }
    for (int i = 0; i < m_; ++i) {
        auto [a, b] = ends_[static_cast<size_t>(i)];
        int u = (dirmask >> i & 1u) ? b : a;
        int v = (dirmask >> i & 1u) ? a : b;
        std::uint32_t ru = reach[u] | (1u << u);
        for (const auto& [x, y] : nonedges_) {
            if ((ru >> x & 1u) && (reach[x] >> y & 1u) && ((reach[y] | (1u << y)) >> v & 1u)) return false;
            if ((ru >> y & 1u) && (reach[y] >> x & 1u) && ((reach[x] | (1u << x)) >> v & 1u)) return false;
        }
    }
    return true;
}

}  // namespace wr
