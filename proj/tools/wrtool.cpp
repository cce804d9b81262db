// wrtool: prove / check / orient / oracle / pretest / corpus commands over
// word-representability machinery.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wr/corpus.hpp"
#include "wr/cycles.hpp"
#include "wr/graph_io.hpp"
#include "wr/oracle.hpp"
#include "wr/prover.hpp"
#include "wr/transcript.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;
constexpr int exit_internal = 4;

struct run_report {
    std::string command;
    std::string input;
    std::string verdict;  // representable | non-representable | inconclusive | valid | invalid
    std::optional<std::size_t> lines;
    std::optional<std::string> artifact_path;
    double elapsed_ms = 0.0;
    json detail = json::object();
};

void emit_json(const run_report& r) {
    json j{{"command", r.command},
           {"input", r.input},
           {"verdict", r.verdict},
           {"lines", r.lines ? json(*r.lines) : json(nullptr)},
           {"artifact_path", r.artifact_path ? json(*r.artifact_path) : json(nullptr)},
           {"elapsed_ms", r.elapsed_ms},
           {"detail", r.detail}};
    std::cout << j.dump(2) << '\n';
}

struct timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw wr::error(wr::errc::malformed_input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct graph_input {
    wr::graph g;
    std::string name;          // corpus name or file stem
    std::optional<fs::path> path;  // set when loaded from a file
};

graph_input resolve_graph(const std::string& spec) {
    if (fs::exists(spec) && fs::is_regular_file(spec)) {
        fs::path p(spec);
        auto fmt = p.extension() == ".g6" ? wr::graph_format::graph6 : wr::graph_format::edge_list;
        return {wr::parse_graph(read_file(spec), fmt), p.stem().string(), p};
    }
    if (const char* dir = std::getenv("WR_CORPUS_DIR")) {
        fs::path p = fs::path(dir) / (spec + ".txt");
        if (fs::exists(p)) return {wr::parse_graph(read_file(p.string()), wr::graph_format::edge_list), spec, p};
    }
    return {wr::corpus_get(spec).g, spec, std::nullopt};
}

fs::path artifact_path(const graph_input& in, const std::string& suffix, const std::string& out_override) {
    if (!out_override.empty()) return out_override;
    if (in.path) {
        fs::path p = *in.path;
        p.replace_extension();
        return p.string() + suffix;
    }
    return in.name + suffix;
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw wr::error(wr::errc::malformed_input, "cannot write " + p.string());
    out << content;
}

std::string orientation_lines(const wr::partial_orientation& po) { return po.to_text(); }

// ---------------------------------------------------------------------------

struct prove_options {
    std::string graph_spec;
    int alg = 2;
    int source = 0;          // 0 = unset
    std::string first_edge;  // "u,v"
    bool all_sources = false;
    bool as_json = false;
    std::string out;
    int max_cycle_length = 0;
    std::size_t copy_limit = 1000000;
};

wr::search_config make_config(const prove_options& opt) {
    wr::search_config cfg;
    cfg.algorithm = static_cast<wr::branch_algorithm>(opt.alg);
    if (opt.source > 0) cfg.source_vertex = opt.source;
    if (!opt.first_edge.empty()) {
        auto comma = opt.first_edge.find(',');
        if (comma == std::string::npos)
            throw wr::error(wr::errc::malformed_input, "--first-edge expects \"U,V\"");
        cfg.first_edge = wr::edge_id(std::stoi(opt.first_edge.substr(0, comma)),
                                     std::stoi(opt.first_edge.substr(comma + 1)));
    }
    if (opt.max_cycle_length > 0) cfg.max_cycle_length = opt.max_cycle_length;
    cfg.copy_limit = opt.copy_limit;
    return cfg;
}

// prove a possibly disconnected graph: every component must be representable
struct whole_prove_result {
    bool representable = true;
    std::optional<std::string> merged_certificate;       // "u->v" lines, original labels
    std::optional<std::string> transcript_text;          // offending component's proof
    std::optional<std::vector<int>> component_vertices;  // original labels of that component
    std::size_t lines = 0;
    wr::search_stats stats;
};

whole_prove_result prove_whole(const wr::graph& g, const wr::search_config& cfg) {
    whole_prove_result res;
    auto comps = g.components();
    std::ostringstream cert;
    for (const auto& comp : comps) {
        auto [sub, labels] = wr::induced_subgraph(g, comp);
        wr::search_config sub_cfg = cfg;
        if (cfg.source_vertex) {
            // the source assumption only applies to its own component
            auto it = std::find(labels.begin(), labels.end(), *cfg.source_vertex);
            if (it == labels.end())
                sub_cfg.source_vertex.reset();
            else
                sub_cfg.source_vertex = static_cast<int>(it - labels.begin()) + 1;
        }
        if (cfg.first_edge && comps.size() > 1)
            throw wr::error(wr::errc::malformed_input,
                            "--first-edge is only supported on connected graphs");
        auto r = wr::prove(sub, sub_cfg);
        res.stats.copies += r.stats.copies;
        res.stats.forcings += r.stats.forcings;
        res.stats.lines += r.stats.lines;
        if (r.representable) {
            for (int i = 0; i < sub.edge_count(); ++i) {
                auto de = r.orientation->directed_at(i);
                cert << labels[static_cast<size_t>(de->from - 1)] << "->"
                     << labels[static_cast<size_t>(de->to - 1)] << '\n';
            }
        } else {
            res.representable = false;
            res.lines = r.transcript->lines.size();
            std::ostringstream txt;
            if (comps.size() > 1) {
                txt << "# component vertices (transcript labels 1..n map to):";
                for (int v : labels) txt << ' ' << v;
                txt << '\n';
                res.component_vertices = labels;
            }
            txt << wr::render(*r.transcript);
            res.transcript_text = txt.str();
            return res;
        }
    }
    res.merged_certificate = cert.str();
    return res;
}

int cmd_prove(const prove_options& opt) {
    timer t;
    auto in = resolve_graph(opt.graph_spec);
    run_report rep;
    rep.command = "prove";
    rep.input = in.name;

    wr::search_config cfg = make_config(opt);
    whole_prove_result result;
    if (opt.all_sources) {
        if (!in.g.is_connected())
            throw wr::error(wr::errc::malformed_input, "--all-sources needs a connected graph");
        std::optional<whole_prove_result> best;
        int best_source = 0;
        json per_source = json::array();
        for (int v = 1; v <= in.g.vertex_count(); ++v) {
            wr::search_config c = cfg;
            c.source_vertex = v;
            auto r = prove_whole(in.g, c);
            if (r.representable) {
                best = std::move(r);
                best_source = v;
                per_source.push_back({{"source", v}, {"verdict", "representable"}});
                break;
            }
            per_source.push_back({{"source", v}, {"lines", r.lines}});
            if (!best || r.lines < best->lines) {
                best = std::move(r);
                best_source = v;
            }
        }
        result = std::move(*best);
        rep.detail["per_source"] = per_source;
        rep.detail["best_source"] = best_source;
        if (!opt.as_json)
            for (const auto& e : per_source)
                if (e.contains("lines"))
                    std::cout << "source " << e["source"] << ": " << e["lines"] << " lines\n";
    } else {
        result = prove_whole(in.g, cfg);
    }

    rep.detail["copies"] = result.stats.copies;
    rep.detail["forcings"] = result.stats.forcings;
    if (result.representable) {
        rep.verdict = "representable";
        auto p = artifact_path(in, ".cert.txt", opt.out);
        write_file(p, *result.merged_certificate);
        rep.artifact_path = p.string();
    } else {
        rep.verdict = "non-representable";
        rep.lines = result.lines;
        auto p = artifact_path(in, ".proof.txt", opt.out);
        write_file(p, *result.transcript_text);
        rep.artifact_path = p.string();
    }
    rep.elapsed_ms = t.ms();
    if (opt.as_json) {
        emit_json(rep);
    } else {
        std::cout << in.name << ": " << rep.verdict;
        if (rep.lines) std::cout << " (" << *rep.lines << " proof lines)";
        std::cout << "\n"
                  << (result.representable ? "certificate" : "transcript") << " written to "
                  << *rep.artifact_path << "\n";
    }
    return exit_ok;
}

int cmd_check(const std::string& graph_spec, const std::string& proof_path, int source, bool as_json) {
    timer t;
    auto in = resolve_graph(graph_spec);
    auto transcript = wr::parse_transcript(read_file(proof_path));
    std::optional<int> src;
    if (source > 0) src = source;
    auto report = wr::check(in.g, transcript, src);

    run_report rep;
    rep.command = "check";
    rep.input = in.name;
    rep.verdict = report.valid ? "valid" : "invalid";
    rep.lines = transcript.lines.size();
    rep.elapsed_ms = t.ms();
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"line", f.line}, {"instruction", f.instruction_index}, {"reason", f.reason}});
    rep.detail["failures"] = failures;
    rep.detail["assumptions"] = report.assumptions;
    rep.detail["witness_details"] = report.witness_details;
    json coverage = json::array();
    for (auto [id, discharged] : report.coverage)
        coverage.push_back({{"copy", id}, {"discharged", discharged}});
    rep.detail["coverage"] = coverage;
    if (as_json) {
        emit_json(rep);
    } else {
        std::cout << "proof " << proof_path << " against " << in.name << ": " << rep.verdict << " ("
                  << transcript.lines.size() << " lines)\n";
        for (const auto& a : report.assumptions) std::cout << "  assumption: " << a << '\n';
        for (const auto& f : report.failures)
            std::cout << "  line " << f.line << " instr " << f.instruction_index << ": " << f.reason << '\n';
    }
    return exit_ok;
}

int cmd_orient(const std::string& graph_spec, bool as_json, const std::string& out) {
    timer t;
    auto in = resolve_graph(graph_spec);
    wr::search_config cfg;
    auto result = prove_whole(in.g, cfg);
    run_report rep;
    rep.command = "orient";
    rep.input = in.name;
    rep.verdict = result.representable ? "representable" : "non-representable";
    rep.elapsed_ms = t.ms();
    if (result.representable) {
        if (!out.empty()) {
            write_file(out, *result.merged_certificate);
            rep.artifact_path = out;
        }
        rep.detail["orientation"] = *result.merged_certificate;
    }
    if (as_json) {
        emit_json(rep);
    } else if (result.representable) {
        std::cout << *result.merged_certificate;
    } else {
        std::cout << "none: " << in.name << " has no semi-transitive orientation\n";
    }
    return exit_ok;
}

int cmd_oracle(const std::string& graph_spec, int max_edges, bool serial, bool as_json) {
    timer t;
    auto in = resolve_graph(graph_spec);
    wr::oracle_limits lim;
    lim.max_edges = max_edges;
    auto verdict = serial ? wr::brute_force_count_serial(in.g, lim) : wr::brute_force_count(in.g, lim);
    run_report rep;
    rep.command = "oracle";
    rep.input = in.name;
    rep.verdict = verdict.semi_transitive_count > 0 ? "representable" : "non-representable";
    rep.elapsed_ms = t.ms();
    rep.detail["semi_transitive_count"] = verdict.semi_transitive_count;
    rep.detail["enumerated"] = verdict.enumerated;
    rep.detail["kernel"] = serial ? "serial" : "parallel";
    if (verdict.example) rep.detail["example_orientation"] = orientation_lines(*verdict.example);
    if (as_json) {
        emit_json(rep);
    } else {
        std::cout << in.name << ": " << verdict.semi_transitive_count << " of " << verdict.enumerated
                  << " orientations are semi-transitive -> " << rep.verdict << '\n';
        if (verdict.example) std::cout << "example:\n" << orientation_lines(*verdict.example);
    }
    return exit_ok;
}

int cmd_pretest(const std::string& graph_spec, bool as_json) {
    timer t;
    auto in = resolve_graph(graph_spec);
    auto report = wr::neighborhood_pretest(in.g);
    run_report rep;
    rep.command = "pretest";
    rep.input = in.name;
    rep.verdict = report.conclusive ? "non-representable" : "inconclusive";
    rep.elapsed_ms = t.ms();
    json per_vertex = json::array();
    for (const auto& pv : report.per_vertex) {
        json j{{"vertex", pv.vertex}, {"comparability", pv.neighborhood_comparability}};
        if (!pv.obstruction.empty()) {
            json chain = json::array();
            for (const auto& de : pv.obstruction)
                chain.push_back(std::to_string(de.from) + "->" + std::to_string(de.to));
            j["obstruction"] = chain;
        }
        per_vertex.push_back(std::move(j));
    }
    rep.detail["per_vertex"] = per_vertex;
    if (as_json) {
        emit_json(rep);
    } else {
        for (const auto& pv : report.per_vertex)
            std::cout << "vertex " << pv.vertex << ": neighborhood "
                      << (pv.neighborhood_comparability ? "comparability" : "NOT comparability") << '\n';
        std::cout << (report.conclusive ? "conclusive: not word-representable"
                                        : "inconclusive: no information")
                  << '\n';
    }
    return exit_ok;
}

const char* status_str(wr::corpus_status s) {
    switch (s) {
        case wr::corpus_status::word_representable: return "word-representable";
        case wr::corpus_status::non_word_representable: return "non-word-representable";
        default: return "unknown";
    }
}

int cmd_corpus_list() {
    for (const auto& name : wr::corpus_names()) {
        const auto& e = wr::corpus_get(name);
        std::cout << name << ": " << e.g.vertex_count() << " vertices, " << e.g.edge_count() << " edges, "
                  << status_str(e.expected_status) << '\n';
    }
    return exit_ok;
}

int cmd_corpus_show(const std::string& name) {
    const auto& e = wr::corpus_get(name);
    std::cout << wr::corpus_entry_text(name);
    if (e.reference_orientation) {
        std::cout << "# reference semi-transitive orientation:\n";
        for (const auto& de : *e.reference_orientation)
            std::cout << "# " << de.from << "->" << de.to << '\n';
    }
    return exit_ok;
}

int cmd_corpus_verify(bool as_json) {
    timer t;
    int failures = 0;
    json checks = json::array();
    auto item = [&](const std::string& name, bool ok) {
        checks.push_back({{"name", name}, {"pass", ok}});
        if (!ok) ++failures;
        if (!as_json) std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    };

    for (const char* name : {"g12prime", "g17prime"}) {
        const auto& e = wr::corpus_get(name);
        wr::partial_orientation po(e.g);
        for (const auto& de : *e.reference_orientation) po.set_directed(de);
        item(std::string(name) + " reference orientation is semi-transitive",
             wr::is_semi_transitive(po).first);
    }
    for (const auto& proof : wr::reference_proofs()) {
        bool ok = false;
        try {
            auto tr = wr::parse_transcript(proof.text);
            auto reportc = wr::check(wr::corpus_get(proof.graph_name).g, tr, proof.source_vertex);
            ok = reportc.valid;
        } catch (const std::exception&) {
            ok = false;
        }
        item("reference proof " + proof.name + " checks against " + proof.graph_name, ok);
    }
    {
        auto r = wr::prove(wr::corpus_get("w5").g, {});
        bool ok = !r.representable && r.transcript &&
                  wr::check(wr::corpus_get("w5").g, *r.transcript).valid;
        item("prover refutes w5 with a checker-valid transcript", ok);
    }
    {
        auto v = wr::brute_force_count(wr::corpus_get("w5").g);
        item("oracle counts zero semi-transitive orientations of w5", v.semi_transitive_count == 0);
    }
    {
        auto rep = wr::neighborhood_pretest(wr::corpus_get("w5").g);
        item("pretest is conclusive on w5", rep.conclusive);
    }

    if (as_json) {
        run_report rep;
        rep.command = "corpus verify";
        rep.input = "corpus";
        rep.verdict = failures == 0 ? "valid" : "invalid";
        rep.elapsed_ms = t.ms();
        rep.detail["checks"] = checks;
        emit_json(rep);
    }
    return failures == 0 ? exit_ok : exit_internal;
}

int classify_error(const wr::error& e) {
    switch (e.code()) {
        case wr::errc::copy_limit_exceeded:
        case wr::errc::budget_exceeded:
        case wr::errc::too_many_edges:
        case wr::errc::catalog_overflow: return exit_resource;
        case wr::errc::internal_inconsistency: return exit_internal;
        default: return exit_usage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-transitive orientation search, certificates and proof checking"};
    app.require_subcommand(1);

    prove_options popt;
    auto* prove = app.add_subcommand("prove", "search for an orientation or a refutation proof");
    prove->add_option("graph", popt.graph_spec, "corpus name or graph file")->required();
    prove->add_option("--alg", popt.alg, "branch selection algorithm")->check(CLI::Range(1, 3));
    prove->add_option("--source", popt.source, "assume this vertex is a source");
    prove->add_option("--first-edge", popt.first_edge, "override the first oriented edge, \"U,V\"");
    prove->add_flag("--all-sources", popt.all_sources, "try every vertex as source, keep the shortest proof");
    prove->add_flag("--json", popt.as_json, "machine-readable report");
    prove->add_option("--out", popt.out, "artifact output path");
    prove->add_option("--max-cycle-length", popt.max_cycle_length, "cycle catalog length cap");
    prove->add_option("--copy-limit", popt.copy_limit, "safety bound on copies");

    std::string check_graph, check_proof;
    int check_source = 0;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "replay and verify a proof transcript");
    check->add_option("graph", check_graph, "corpus name or graph file")->required();
    check->add_option("proof", check_proof, "transcript file")->required();
    check->add_option("--source", check_source, "source assumption supplied out-of-band");
    check->add_flag("--json", check_json, "machine-readable report");

    std::string orient_graph, orient_out;
    bool orient_json = false;
    auto* orient = app.add_subcommand("orient", "emit a semi-transitive orientation or report none");
    orient->add_option("graph", orient_graph, "corpus name or graph file")->required();
    orient->add_flag("--json", orient_json, "machine-readable report");
    orient->add_option("--out", orient_out, "write the orientation to a file");

    std::string oracle_graph;
    int oracle_max_edges = 24;
    bool oracle_serial = false, oracle_json = false;
    auto* oracle = app.add_subcommand("oracle", "exhaustively count semi-transitive orientations");
    oracle->add_option("graph", oracle_graph, "corpus name or graph file")->required();
    oracle->add_option("--max-edges", oracle_max_edges, "edge-count guard");
    oracle->add_flag("--serial", oracle_serial, "use the serial reference kernel");
    oracle->add_flag("--json", oracle_json, "machine-readable report");

    std::string pretest_graph;
    bool pretest_json = false;
    auto* pretest = app.add_subcommand("pretest", "comparability test of every vertex neighborhood");
    pretest->add_option("graph", pretest_graph, "corpus name or graph file")->required();
    pretest->add_flag("--json", pretest_json, "machine-readable report");

    auto* corpus = app.add_subcommand("corpus", "built-in graph corpus");
    corpus->require_subcommand(1);
    auto* clist = corpus->add_subcommand("list", "list corpus entries");
    std::string show_name;
    auto* cshow = corpus->add_subcommand("show", "print one entry as edge-list text");
    cshow->add_option("name", show_name, "corpus entry name")->required();
    bool verify_json = false;
    auto* cverify = corpus->add_subcommand("verify", "replay the bundled certificates and proofs");
    cverify->add_flag("--json", verify_json, "machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (prove->parsed()) return cmd_prove(popt);
        if (check->parsed()) return cmd_check(check_graph, check_proof, check_source, check_json);
        if (orient->parsed()) return cmd_orient(orient_graph, orient_json, orient_out);
        if (oracle->parsed()) return cmd_oracle(oracle_graph, oracle_max_edges, oracle_serial, oracle_json);
        if (pretest->parsed()) return cmd_pretest(pretest_graph, pretest_json);
        if (corpus->parsed()) {
            if (clist->parsed()) return cmd_corpus_list();
            if (cshow->parsed()) return cmd_corpus_show(show_name);
            if (cverify->parsed()) return cmd_corpus_verify(verify_json);
        }
    } catch (const wr::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
