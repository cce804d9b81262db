#include "wr/transcript.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wr/orientation.hpp"

namespace wr {

namespace {

std::string arrow(const directed_edge& e) {
    return std::to_string(e.from) + "->" + std::to_string(e.to);
}

std::string dash_list(const std::vector<int>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(vs[i]);
    }
    return s;
}

}  // namespace

std::string render(const proof_transcript& t) {
    std::ostringstream os;
    if (t.graph_name) os << "graph " << *t.graph_name << '\n';
    if (t.source_vertex) os << "source " << *t.source_vertex << '\n';
    for (size_t li = 0; li < t.lines.size(); ++li) {
        os << li + 1 << '.';
        for (const auto& ins : t.lines[li].instructions) {
            os << ' ';
            if (const auto* ie = std::get_if<instr_initial_edge>(&ins)) {
                os << arrow(ie->edge);
            } else if (const auto* mc = std::get_if<instr_move_to_copy>(&ins)) {
                os << "MC" << mc->copy_id << ' ' << arrow(mc->reminder);
            } else if (const auto* br = std::get_if<instr_branch>(&ins)) {
                os << 'B' << arrow(br->edge) << " (Copy " << br->new_copy_id << ')';
            } else if (const auto* o = std::get_if<instr_orient>(&ins)) {
                for (size_t k = 0; k < o->edges.size(); ++k) {
                    if (k) os << ' ';
                    os << 'O' << arrow(o->edges[k]);
                }
                os << " (C" << dash_list(o->cycle) << ')';
            }
        }
        const auto& term = t.lines[li].term;
        os << ' '
           << (term.kind == terminator_kind::shortcut ? 'S'
               : term.kind == terminator_kind::error  ? 'E'
                                                      : 'D')
           << ':' << dash_list(term.vertices) << '\n';
    }
    return os.str();
}

namespace {

struct token {
    std::string text;
    int column;  // 1-based
};

std::vector<token> tokenize(const std::string& line) {
    std::vector<token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

// "12->15" -> directed edge; nullopt when the token is not an edge
std::optional<directed_edge> parse_arrow(const std::string& s) {
    size_t p = s.find("->");
    if (p == std::string::npos || p == 0 || p + 2 >= s.size()) return std::nullopt;
    for (size_t i = 0; i < s.size(); ++i)
        if (!(std::isdigit(static_cast<unsigned char>(s[i])) != 0 || i == p || i == p + 1)) return std::nullopt;
    try {
        return directed_edge{std::stoi(s.substr(0, p)), std::stoi(s.substr(p + 2))};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::vector<int>> parse_dash_list(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
        if (j == i) return std::nullopt;
        try {
            out.push_back(std::stoi(s.substr(i, j - i)));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (j == s.size()) break;
        if (s[j] != '-') return std::nullopt;
        i = j + 1;
        if (i == s.size()) return std::nullopt;  // trailing dash
    }
    return out;
}

}  // namespace

proof_transcript parse_transcript(const std::string& text) {
    proof_transcript t;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    int next_number = 1;
    while (std::getline(is, raw)) {
        ++lineno;
        // normalize the unicode arrow alias before tokenizing
        std::string line;
        line.reserve(raw.size());
        for (size_t i = 0; i < raw.size();) {
            if (raw.compare(i, 3, "\xe2\x86\x92") == 0) {
                line += "->";
                i += 3;
            } else {
                line += raw[i++];
            }
        }
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text[0] == '#') continue;
        if (next_number == 1 && t.lines.empty()) {
            if (toks[0].text == "graph" && toks.size() == 2) {
                t.graph_name = toks[1].text;
                continue;
            }
            if (toks[0].text == "source" && toks.size() == 2) {
                try {
                    t.source_vertex = std::stoi(toks[1].text);
                } catch (const std::exception&) {
                    throw parse_error("bad source vertex", lineno, toks[1].column);
                }
                continue;
            }
        }
        // numbered proof line
        if (toks[0].text != std::to_string(next_number) + ".")
            throw parse_error("expected line number \"" + std::to_string(next_number) + ".\"", lineno,
                              toks[0].column);
        proof_line pl;
        bool terminated = false;
        size_t i = 1;
        while (i < toks.size()) {
            const auto& tok = toks[i];
            if (terminated) throw parse_error("content after terminator", lineno, tok.column);
            if (tok.text.size() >= 2 && tok.text[1] == ':' &&
                (tok.text[0] == 'S' || tok.text[0] == 'E' || tok.text[0] == 'D')) {
                auto vs = parse_dash_list(tok.text.substr(2));
                if (!vs || vs->empty()) throw parse_error("malformed terminator", lineno, tok.column);
                pl.term.kind = tok.text[0] == 'S'   ? terminator_kind::shortcut
                               : tok.text[0] == 'E' ? terminator_kind::error
                                                    : terminator_kind::directed_cycle;
                pl.term.vertices = std::move(*vs);
                terminated = true;
                ++i;
                continue;
            }
            if (tok.text.rfind("MC", 0) == 0) {
                if (!pl.instructions.empty() || next_number == 1)
                    throw parse_error("MC is only allowed at the start of lines after the first", lineno,
                                      tok.column);
                int copy_id = 0;
                try {
                    copy_id = std::stoi(tok.text.substr(2));
                } catch (const std::exception&) {
                    throw parse_error("malformed MC instruction", lineno, tok.column);
                }
                if (i + 1 >= toks.size()) throw parse_error("MC needs a reminder edge", lineno, tok.column);
                auto rem = parse_arrow(toks[i + 1].text);
                if (!rem) throw parse_error("malformed MC reminder edge", lineno, toks[i + 1].column);
                pl.instructions.push_back(instr_move_to_copy{copy_id, *rem});
                i += 2;
                continue;
            }
            if (tok.text[0] == 'B') {
                auto e = parse_arrow(tok.text.substr(1));
                if (!e) throw parse_error("malformed branch edge", lineno, tok.column);
                if (i + 2 >= toks.size() || toks[i + 1].text != "(Copy" || toks[i + 2].text.empty() ||
                    toks[i + 2].text.back() != ')')
                    throw parse_error("branch must be followed by \"(Copy N)\"", lineno, tok.column);
                int copy_id = 0;
                try {
                    copy_id = std::stoi(toks[i + 2].text.substr(0, toks[i + 2].text.size() - 1));
                } catch (const std::exception&) {
                    throw parse_error("malformed copy number", lineno, toks[i + 2].column);
                }
                pl.instructions.push_back(instr_branch{*e, copy_id});
                i += 3;
                continue;
            }
            if (tok.text[0] == 'O') {
                instr_orient o;
                auto e1 = parse_arrow(tok.text.substr(1));
                if (!e1) throw parse_error("malformed orient edge", lineno, tok.column);
                o.edges.push_back(*e1);
                ++i;
                if (i < toks.size() && toks[i].text[0] == 'O') {
                    auto e2 = parse_arrow(toks[i].text.substr(1));
                    if (!e2) throw parse_error("malformed orient edge", lineno, toks[i].column);
                    o.edges.push_back(*e2);
                    ++i;
                }
                if (i >= toks.size() || toks[i].text.rfind("(C", 0) != 0 || toks[i].text.back() != ')')
                    throw parse_error("orient needs a cycle citation \"(C...)\"", lineno,
                                      i < toks.size() ? toks[i].column : tok.column);
                auto cyc = parse_dash_list(toks[i].text.substr(2, toks[i].text.size() - 3));
                if (!cyc || cyc->size() < 3) throw parse_error("malformed cycle citation", lineno, toks[i].column);
                o.cycle = std::move(*cyc);
                pl.instructions.push_back(std::move(o));
                ++i;
                continue;
            }
            if (auto init = parse_arrow(tok.text)) {
                if (next_number != 1 || !pl.instructions.empty())
                    throw parse_error("a bare edge is only allowed as the first instruction of line 1", lineno,
                                      tok.column);
                pl.instructions.push_back(instr_initial_edge{*init});
                ++i;
                continue;
            }
            throw parse_error("unrecognized token \"" + tok.text + "\"", lineno, tok.column);
        }
        if (!terminated) throw parse_error("proof line lacks a terminator", lineno, 1);
        if (next_number > 1 && (pl.instructions.empty() ||
                                !std::holds_alternative<instr_move_to_copy>(pl.instructions.front())))
            throw parse_error("lines after the first must start with MC", lineno, 1);
        t.lines.push_back(std::move(pl));
        ++next_number;
    }
    if (t.lines.empty()) throw parse_error("no proof lines", lineno == 0 ? 1 : lineno, 1);
    return t;
}

// ---------------------------------------------------------------------------
// checker

namespace {

struct copy_state {
    partial_orientation po;
    std::optional<directed_edge> reminder;  // reversed branch edge at creation
    bool discharged = false;
};

struct replayer {
    const graph& g;
    check_report& report;
    std::map<int, copy_state> copies;
    int current = 1;
    int line = 0;   // 1-based, set per line
    int instr = 0;  // current instruction index

    replayer(const graph& g_, check_report& r) : g(g_), report(r) {}

    void fail(const std::string& reason) { report.failures.push_back({line, instr, reason}); }

    partial_orientation& po() { return copies.at(current).po; }

    // state of directed candidate: 0 = matches, 1 = unoriented, -1 = opposite/unknown
    int directed_state(const partial_orientation& p, const directed_edge& de) const {
        auto idx = g.edge_index(de.undirected());
        if (!idx) return -1;
        auto cur = p.directed_at(*idx);
        if (!cur) return 1;
        return *cur == de ? 0 : -1;
    }

    bool cycle_exists(const std::vector<int>& cyc) const {
        if (cyc.size() < 3) return false;
        std::vector<int> sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
        for (size_t j = 0; j < cyc.size(); ++j) {
            if (!g.has_vertex(cyc[j])) return false;
            if (!g.adjacent(cyc[j], cyc[(j + 1) % cyc.size()])) return false;
        }
        return true;
    }

    // forcing premise on the cited cycle, independent of the search engine:
    // returns the forced directed edges, empty when no forcing applies
    std::vector<directed_edge> forced_by_cycle(const std::vector<int>& cyc) const {
        const auto& p = copies.at(current).po;
        const int m = static_cast<int>(cyc.size());
        bool clique = is_clique(g, cyc);
        for (int dir = 0; dir < 2; ++dir) {
            int with = 0, unoriented = 0;
            std::vector<int> free_slots;
            for (int j = 0; j < m; ++j) {
                int a = cyc[static_cast<size_t>(j)];
                int b = cyc[static_cast<size_t>((j + 1) % m)];
                if (dir) std::swap(a, b);
                int st = directed_state(p, {a, b});
                if (st == 1) {
                    ++unoriented;
                    free_slots.push_back(j);
                } else if (st == 0) {
                    ++with;
                }
            }
            // triangle: two edges one way force the third (acyclicity);
            // longer non-clique cycle: m-2 one way force the free rest
            bool premise = (m == 3) ? (with == 2 && unoriented == 1)
                                    : (!clique && with == m - 2 && unoriented >= 1);
            if (!premise) continue;
            std::vector<directed_edge> forced;
            for (int j : free_slots) {
                int a = cyc[static_cast<size_t>(j)];
                int b = cyc[static_cast<size_t>((j + 1) % m)];
                if (dir) std::swap(a, b);
                forced.push_back({b, a});  // opposite to the majority direction
            }
            return forced;
        }
        return {};
    }

    void run_line(const proof_line& pl, bool first_line, std::optional<int> source);
    void finish(const proof_transcript& t);
};

void replayer::run_line(const proof_line& pl, bool first_line, std::optional<int> source) {
    instr = 0;
    for (const auto& ins : pl.instructions) {
        if (const auto* mc = std::get_if<instr_move_to_copy>(&ins)) {
            if (instr != 0 || first_line) {
                fail("MC must start a line after the first");
                return;
            }
            auto it = copies.find(mc->copy_id);
            if (it == copies.end()) {
                fail("Copy " + std::to_string(mc->copy_id) + " was never created");
                return;
            }
            if (it->second.discharged) {
                fail("Copy " + std::to_string(mc->copy_id) + " is already discharged");
                return;
            }
            if (!it->second.reminder || *it->second.reminder != mc->reminder) {
                fail("reminder edge does not match the branch recorded for Copy " +
                     std::to_string(mc->copy_id));
                return;
            }
            current = mc->copy_id;
        } else if (const auto* ie = std::get_if<instr_initial_edge>(&ins)) {
            if (!first_line || instr != 0) {
                fail("initial edge is only allowed at the start of line 1");
                return;
            }
            if (source) {
                fail("an initial WLOG edge is not sound under a source assumption");
                return;
            }
            if (!g.edge_index(ie->edge.undirected())) {
                fail("initial edge is not an edge of the graph");
                return;
            }
            if (directed_state(po(), ie->edge) != 1) {
                fail("initial edge is already oriented");
                return;
            }
            po().set_directed(ie->edge);
            report.assumptions.push_back("line 1: initial edge " + arrow(ie->edge) +
                                         " fixed WLOG (reversal symmetry)");
        } else if (const auto* br = std::get_if<instr_branch>(&ins)) {
            auto idx = g.edge_index(br->edge.undirected());
            if (!idx) {
                fail("branch edge is not an edge of the graph");
                return;
            }
            if (po().state_at(*idx) != edge_state::unoriented) {
                fail("branch edge is already oriented");
                return;
            }
            if (copies.count(br->new_copy_id) != 0 || br->new_copy_id == 1) {
                fail("Copy " + std::to_string(br->new_copy_id) + " already exists");
                return;
            }
            copy_state clone{po(), br->edge.reversed(), false};
            clone.po.set_directed(br->edge.reversed());
            copies.emplace(br->new_copy_id, std::move(clone));
            po().set_directed(br->edge);
        } else if (const auto* o = std::get_if<instr_orient>(&ins)) {
            if (!cycle_exists(o->cycle)) {
                fail("cited cycle is not a cycle of the graph");
                return;
            }
            if (o->cycle.size() >= 4 && is_clique(g, o->cycle)) {
                fail("cited cycle of length >= 4 induces a clique; forcing does not apply");
                return;
            }
            auto forced = forced_by_cycle(o->cycle);
            if (forced.empty()) {
                fail("cited cycle forces nothing in the current state");
                return;
            }
            auto claimed = o->edges;
            std::sort(claimed.begin(), claimed.end());
            std::sort(forced.begin(), forced.end());
            if (claimed != forced) {
                fail("claimed orientations are not exactly the forced ones");
                return;
            }
            for (const auto& de : o->edges) po().set_directed(de);
        }
        ++instr;
    }

    // terminator
    instr = -1;
    const auto& term = pl.term;
    const auto& vs = term.vertices;
    auto all_distinct = [&] {
        std::vector<int> s = vs;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (term.kind == terminator_kind::shortcut) {
        if (vs.size() < 3 || !all_distinct()) {
            fail("shortcut terminator needs at least three distinct vertices");
            return;
        }
        for (size_t j = 0; j + 1 < vs.size(); ++j)
            if (directed_state(po(), {vs[j], vs[j + 1]}) != 0) {
                fail("shortcut path edge " + std::to_string(vs[j]) + "->" + std::to_string(vs[j + 1]) +
                     " is not oriented as stated");
                return;
            }
        if (directed_state(po(), {vs.front(), vs.back()}) != 0) {
            fail("shortcutting edge is not oriented as stated");
            return;
        }
        std::optional<std::pair<int, int>> missing;
        for (size_t a = 0; a < vs.size() && !missing; ++a)
            for (size_t b = a + 1; b < vs.size() && !missing; ++b)
                if (!g.adjacent(vs[a], vs[b])) missing = {vs[a], vs[b]};
        if (!missing) {
            fail("no non-adjacent pair on the shortcut path (the cited subgraph is transitive)");
            return;
        }
        report.witness_details.push_back("line " + std::to_string(line) + ": shortcut " + dash_list(vs) +
                                         " non-adjacent pair " + std::to_string(missing->first) + "," +
                                         std::to_string(missing->second));
    } else if (term.kind == terminator_kind::error) {
        if (!cycle_exists(vs)) {
            fail("error terminator does not cite a cycle of the graph");
            return;
        }
        if (is_clique(g, vs)) {
            fail("error terminator cites a clique cycle");
            return;
        }
        std::optional<edge_id> open;
        int open_count = 0;
        for (size_t j = 0; j < vs.size(); ++j) {
            edge_id e(vs[j], vs[(j + 1) % vs.size()]);
            if (po().state(e) == edge_state::unoriented) {
                open = e;
                ++open_count;
            }
        }
        if (open_count != 1) {
            fail("error terminator needs exactly one unoriented cycle edge (found " +
                 std::to_string(open_count) + ")");
            return;
        }
        for (edge_dir d : {edge_dir::forward, edge_dir::backward}) {
            partial_orientation probe = po();
            probe.set(*open, d);
            if (detect_violation(probe).kind == violation_kind::none) {
                fail("the unoriented edge of the error cycle admits a violation-free orientation");
                return;
            }
        }
        report.witness_details.push_back("line " + std::to_string(line) + ": edge " +
                                         std::to_string(open->u) + "-" + std::to_string(open->v) +
                                         " unorientable either way");
    } else {  // directed cycle
        if (vs.size() < 3 || !all_distinct()) {
            fail("directed-cycle terminator needs at least three distinct vertices");
            return;
        }
        for (size_t j = 0; j < vs.size(); ++j)
            if (directed_state(po(), {vs[j], vs[(j + 1) % vs.size()]}) != 0) {
                fail("directed-cycle edge is not oriented as stated");
                return;
            }
    }
    copies.at(current).discharged = true;
}

void replayer::finish(const proof_transcript&) {
    for (const auto& [id, st] : copies) {
        report.coverage.emplace_back(id, st.discharged);
        if (!st.discharged)
            report.failures.push_back({0, -1, "Copy " + std::to_string(id) + " was never discharged"});
    }
    report.valid = report.failures.empty();
}

}  // namespace

check_report check(const graph& g, const proof_transcript& t, std::optional<int> source_override) {
    check_report report;
    std::optional<int> source = t.source_vertex ? t.source_vertex : source_override;
    if (t.source_vertex && source_override && *t.source_vertex != *source_override)
        report.failures.push_back({0, -1, "transcript source vertex disagrees with the supplied one"});
    if (source && !g.has_vertex(*source)) {
        report.failures.push_back({0, -1, "source vertex " + std::to_string(*source) + " is not in the graph"});
        return report;
    }

    replayer rp(g, report);
    partial_orientation root(g);
    if (source) {
        for (int w : g.neighbors(*source)) root.set_directed({*source, w});
        report.assumptions.push_back("vertex " + std::to_string(*source) +
                                     " is assumed to be a source (word-reversal argument)");
    }
    rp.copies.emplace(1, copy_state{std::move(root), std::nullopt, false});

    for (size_t li = 0; li < t.lines.size(); ++li) {
        rp.line = static_cast<int>(li) + 1;
        size_t before = report.failures.size();
        rp.run_line(t.lines[li], li == 0, source);
        if (report.failures.size() > before) {
            // the line is unreliable from the failure on; keep replaying later
            // lines so the report covers as much as possible
            continue;
        }
    }
    rp.finish(t);
    return report;
}

}  // namespace wr
