#pragma once

#include <optional>

#include "bwc/coloring.hpp"

namespace bwc {

struct SearchBudget {
    std::optional<int> max_separator_size;
    std::optional<long long> max_nodes;
    std::optional<double> time_limit_seconds;

    bool any() const {
        return max_separator_size.has_value() || max_nodes.has_value() ||
               time_limit_seconds.has_value();
    }
};

struct SolveResult {
    long long value = 0;
    Coloring witness;
    int separator_size = 0;   // uncolored cells in the witness
    long long explored = 0;   // subsets evaluated (after symmetry rejection)
    bool proven_optimal = false;
};

// Exact max min(b, w) by iterative deepening over the uncolored-separator
// size u: for a fixed uncolored set S every component of the attack graph
// minus S is monochromatic, so the best min(b, w) for that S is a two-way
// partition of component sizes (subset-sum). Deepening stops once the bound
// floor((mn-u)/2) cannot beat the best found. Boards over 30 cells require
// an explicit budget; over 64 cells the engine refuses outright.
//
// Results, witnesses and node counts are deterministic for a fixed thread
// count; the value and witness are independent of the thread count.
SolveResult solve_balanced(const BoardSpec& spec, const SearchBudget& budget = {},
                           int threads = 1, bool symmetry_pruning = true);

// Exact max w over all valid placements of exactly b blacks (the fixed-b
// optimization variant): enumerates black b-subsets with symmetry pruning,
// scoring each by max_white. Single-threaded.
SolveResult solve_fixed_b(const BoardSpec& spec, int b, const SearchBudget& budget = {});

// Lexicographically least image of a set under the board's symmetry group
// (8 elements for square boards, 4 otherwise). Idempotent.
CellSet canonicalize(const BoardSpec& spec, const CellSet& cells);

}  // namespace bwc
