#include "wr/graph_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace wr {

namespace {

struct line_scanner {
    const std::string& text;
    size_t pos = 0;
    int line = 0;

    // next non-blank, non-comment line; returns false at end
    bool next(std::string& out, int& lineno) {
        while (pos < text.size()) {
            size_t end = text.find('\n', pos);
            if (end == std::string::npos) end = text.size();
            std::string raw = text.substr(pos, end - pos);
            pos = end + 1;
            ++line;
            size_t first = raw.find_first_not_of(" \t\r");
            if (first == std::string::npos || raw[first] == '#') continue;
            out = raw;
            lineno = line;
            return true;
        }
        return false;
    }
};

// parses exactly the ints on the line; records 1-based column of each token
bool parse_ints(const std::string& s, std::vector<long>& vals, std::vector<int>& cols) {
    vals.clear();
    cols.clear();
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i])) != 0) {
            ++i;
            continue;
        }
        size_t start = i;
        bool neg = s[i] == '-';
        if (neg) ++i;
        size_t digits = 0;
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) != 0) {
            v = v * 10 + (s[i] - '0');
            ++i;
            ++digits;
            if (v > 1000000000L) return false;
        }
        if (digits == 0) return false;
        vals.push_back(neg ? -v : v);
        cols.push_back(static_cast<int>(start) + 1);
    }
    return true;
}

graph parse_edge_list(const std::string& text) {
    line_scanner sc{text};
    std::string ln;
    int lineno = 0;
    if (!sc.next(ln, lineno)) throw parse_error("empty input, expected header \"n m\"", 1, 1);
    std::vector<long> vals;
    std::vector<int> cols;
    if (!parse_ints(ln, vals, cols) || vals.size() != 2 || vals[0] < 0 || vals[1] < 0)
        throw parse_error("malformed header, expected \"n m\"", lineno, 1);
    int n = static_cast<int>(vals[0]);
    long m = vals[1];
    std::vector<edge_id> edges;
    edges.reserve(static_cast<size_t>(m));
    std::vector<char> seen(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (long k = 0; k < m; ++k) {
        if (!sc.next(ln, lineno))
            throw parse_error("expected " + std::to_string(m) + " edge lines, got " + std::to_string(k),
                              sc.line + 1, 1);
        if (!parse_ints(ln, vals, cols) || vals.size() != 2)
            throw parse_error("malformed edge line, expected \"u v\"", lineno, 1);
        long u = vals[0], v = vals[1];
        if (u < 1 || u > n) throw parse_error("vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n), lineno, cols[0]);
        if (v < 1 || v > n) throw parse_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n), lineno, cols[1]);
        if (u == v) throw parse_error("self-loop on vertex " + std::to_string(u), lineno, cols[0]);
        edge_id e(static_cast<int>(u), static_cast<int>(v));
        size_t key = static_cast<size_t>(e.u - 1) * static_cast<size_t>(n) + static_cast<size_t>(e.v - 1);
        if (seen[key])
            throw parse_error("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v), lineno, cols[0]);
        seen[key] = 1;
        edges.push_back(e);
    }
    if (sc.next(ln, lineno)) throw parse_error("unexpected extra line after " + std::to_string(m) + " edges", lineno, 1);
    return graph(n, std::move(edges));
}

graph parse_graph6(const std::string& text) {
    // single data line
    line_scanner sc{text};
    std::string ln;
    int lineno = 0;
    if (!sc.next(ln, lineno)) throw parse_error("empty graph6 input", 1, 1);
    while (!ln.empty() && (ln.back() == '\r' || ln.back() == ' ')) ln.pop_back();
    std::string extra;
    int extra_line = 0;
    if (sc.next(extra, extra_line)) throw parse_error("graph6 input must be a single line", extra_line, 1);
    size_t i = 0;
    const std::string header = ">>graph6<<";
    if (ln.rfind(header, 0) == 0) i = header.size();
    if (i >= ln.size()) throw parse_error("missing graph6 data", lineno, static_cast<int>(i) + 1);
    int c = static_cast<unsigned char>(ln[i]);
    if (c < 63 || c > 125)
        throw parse_error("bad graph6 size byte", lineno, static_cast<int>(i) + 1);
    if (c == 126) throw parse_error("graph6 graphs with more than 62 vertices are not supported", lineno, static_cast<int>(i) + 1);
    int n = c - 63;
    ++i;
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long chars_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(ln.size() - i) != chars_needed)
        throw parse_error("graph6 body has wrong length (expected " + std::to_string(chars_needed) +
                              " characters for n=" + std::to_string(n) + ")",
                          lineno, static_cast<int>(i) + 1);
    std::vector<edge_id> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            size_t at = i + static_cast<size_t>(bit / 6);
            int ch = static_cast<unsigned char>(ln[at]);
            if (ch < 63 || ch > 126)
                throw parse_error("bad graph6 character", lineno, static_cast<int>(at) + 1);
            int b = (ch - 63) >> (5 - bit % 6) & 1;
            if (b) edges.emplace_back(u + 1, v + 1);
        }
    }
    return graph(n, std::move(edges));
}

}  // namespace

graph parse_graph(const std::string& text, graph_format fmt) {
    return fmt == graph_format::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const graph& g, graph_format fmt) {
    std::ostringstream os;
    if (fmt == graph_format::edge_list) {
        os << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
        return os.str();
    }
    int n = g.vertex_count();
    if (n > 62) throw error(errc::malformed_input, "graph6 output supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.adjacent(u + 1, v + 1) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    out.push_back('\n');
    return out;
}

}  // namespace wr
