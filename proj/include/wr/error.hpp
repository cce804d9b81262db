#pragma once

#include <stdexcept>
#include <string>

namespace wr {

enum class errc {
    malformed_input,
    unknown_vertex,
    unknown_edge,
    unknown_name,
    empty_vertex_set,
    already_oriented,
    incomplete_orientation,
    catalog_overflow,
    no_branchable_edge,
    copy_limit_exceeded,
    internal_inconsistency,
    missing_letter,
    not_a_representation,
    budget_exceeded,
    too_many_edges,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// Input errors that can point at a spot in a text document. Line/column are 1-based.
class parse_error : public error {
public:
    parse_error(const std::string& what, int line, int column)
        : error(errc::malformed_input,
                what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace wr
