#pragma once

#include <stdexcept>
#include <string>

#include "tlab/partition.hpp"
#include "tlab/tableau.hpp"

namespace tlab {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int ln, int col, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ", column " + std::to_string(col) +
                             ": " + msg),
          line(ln),
          column(col) {}
};

// Canonical text form: one line per row, "." for each cell of the inner
// shape, entries as decimal integers, single spaces, every line
// newline-terminated, no trailing whitespace.
std::string to_text(const SkewTableau& t);
SkewTableau tableau_from_text(const std::string& text);

// Canonical JSON form: {"outer":[...],"inner":[...],"rows":[[...],...]}
// followed by a newline. Parsing accepts any field order or spacing.
std::string to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const std::string& text);

// Partitions as comma-separated parts, e.g. "7,5,5,5,3,2,1". The empty
// partition is written "-" (also accepted: empty string).
std::string to_text(const Partition& p);
Partition partition_from_text(const std::string& text);

}  // namespace tlab
