#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwc/board.hpp"

namespace bwc {

// A partial two-coloring: black and white are disjoint cell sets on the
// board; everything else is uncolored.
class Coloring {
  public:
    Coloring(const BoardSpec& spec, CellSet black, CellSet white);

    const BoardSpec& spec() const { return spec_; }
    const CellSet& black() const { return black_; }
    const CellSet& white() const { return white_; }
    CellSet uncolored() const;

    int black_count() const { return black_.count(); }
    int white_count() const { return white_.count(); }
    int uncolored_count() const { return spec_.cell_count() - black_count() - white_count(); }

  private:
    BoardSpec spec_;
    CellSet black_;
    CellSet white_;
};

struct VerifyReport {
    bool valid = false;
    int black = 0;
    int white = 0;
    int uncolored = 0;
    // First offending pair in (black cell, white cell) lexicographic order.
    std::optional<std::pair<Cell, Cell>> violation;
};

// Checks that no black cell attacks a white cell.
VerifyReport verify(const Coloring& c);

// Cells a given black set forces to stay uncolored: attack_closure(black)
// minus black itself.
CellSet forced_uncolored(const BoardSpec& spec, const CellSet& black);

// |forced_uncolored|, the number of cells lost to the black placement.
int n_value(const BoardSpec& spec, const CellSet& black);

// The largest white set compatible with the black set (everything not black
// and not forced uncolored), with its size.
std::pair<int, CellSet> max_white(const BoardSpec& spec, const CellSet& black);

struct ColumnFlags {
    bool empty = false;
    bool full = false;
    bool almost_full = false;  // m-1 or m-2 cells occupied
    bool compact = false;      // occupied cells form one block touching row 1
};

struct ColumnProfile {
    std::vector<int> counts;        // per column, left to right
    std::vector<ColumnFlags> flags;
};

ColumnProfile column_profile(const BoardSpec& spec, const CellSet& black);
ColumnProfile column_profile(const Coloring& c);

// Canonical JSON text for a coloring; cells 1-indexed, row-major sorted.
std::string write_placement(const Coloring& c);

// Parses placement JSON, validating shape, ranges and disjointness.
// Throws std::runtime_error with a line/field message on any violation.
Coloring read_placement(const std::string& text);

}  // namespace bwc
