#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bwc/coloring.hpp"

namespace bwc {

struct TraceStep {
    std::string name;
    CellSet black;
    int n_value = 0;  // forced-uncolored count after this step
};

// Step-by-step record of a normalization run. steps.front() is the untouched
// input ("initial"); monotone reports whether the N values never increased.
struct TransformTrace {
    std::vector<TraceStep> steps;
    bool monotone = true;
};

// Moves one black from a sparse column (fewer than m-2 blacks; the row-major
// last such black) into the bottom-most hole of the leftmost almost-full
// column. Identity when no almost-full column or no such donor exists.
CellSet fill_almost_full(const BoardSpec& spec, const CellSet& black);

// Slides each column's blacks to rows 1..b_k, preserving per-column counts.
CellSet compact_columns(const BoardSpec& spec, const CellSet& black);

// Permutes whole columns so the non-empty ones sit contiguously at the left,
// in their original order, each keeping its contents.
CellSet gather_blocks(const BoardSpec& spec, const CellSet& black);

// Compacts, then rewrites column counts in descending order flush left.
CellSet sort_columns(const BoardSpec& spec, const CellSet& black);

// Compacts and sorts, then redistributes the blacks into columns of height
// h = max count: floor(b/h) columns of h plus one remainder column.
CellSet fill_columns(const BoardSpec& spec, const CellSet& black);

// Runs fill_almost_full*, compact_columns, gather_blocks, sort_columns,
// fill_columns in rounds to a fixpoint, recording every application. When a
// fixpoint is reached with b >= m and still no full column, one escalation
// step (fill_leading_column) completes column 1 from the bottom-most blacks
// of the right-most columns and the rounds resume.
std::pair<CellSet, TransformTrace> normalize(const BoardSpec& spec, const CellSet& black);

// True iff N(normalize(black)) >= 2m-1 (both dims odd) or >= 2m (otherwise),
// with m the smaller dimension. Requires |black| = phi(m, n) and both
// dims >= 7; throws std::domain_error otherwise.
bool n_lower_bound_check(const BoardSpec& spec, const CellSet& black);

// Line-oriented report: one "step-name N" line per step.
std::string trace_report(const TransformTrace& trace);

}  // namespace bwc
