#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwc/coloring.hpp"

namespace bwc {

struct IpConstraint {
    std::string name;
    std::vector<std::pair<int, long long>> terms;  // (variable index, coefficient)
    char sense = 'L';                              // 'L': <= rhs, 'E': == rhs
    long long rhs = 0;
};

// The balanced anticoloring integer program: maximize theta subject to
// theta <= b, theta <= w, sum x = b, sum y = w, and one closed-neighborhood
// row per cell: sum of y over N[i,j] plus |N[i,j]| * x_ij <= |N[i,j]|.
// Note the y sum runs over the closed neighborhood, so y_ij itself appears;
// that also forces x/y disjointness. Variables are ordered theta, b, w, all
// x_i_j row-major, all y_i_j row-major.
struct IpModel {
    BoardSpec spec;
    std::vector<std::string> variables;
    std::vector<IpConstraint> constraints;  // balB, balW, minB, minW, nbhd_i_j...
    std::optional<long long> fixed_b;       // emitted as an equality bound on b

    int var_theta() const { return 0; }
    int var_b() const { return 1; }
    int var_w() const { return 2; }
    int var_x(int cell_index) const { return 3 + cell_index; }
    int var_y(int cell_index) const { return 3 + spec.cell_count() + cell_index; }
};

IpModel build_ip(const BoardSpec& spec);
IpModel build_ip(const BoardSpec& spec, std::optional<long long> fixed_b);

// Deterministic CPLEX-LP text: Maximize, Subject To (named rows), Bounds,
// Generals (b, w), Binaries, End. Same model, same bytes.
std::string write_lp(const IpModel& model);

// Minimal reader for the exact dialect write_lp emits, used to round-trip
// models in tests. Throws std::runtime_error on anything it cannot read.
IpModel parse_lp(const std::string& text);

// 0/1/count assignment induced by a coloring: x from black, y from white,
// b, w the class sizes, theta = min(b, w).
std::vector<long long> assignment_from_coloring(const IpModel& model, const Coloring& c);

// Decodes a feasible point back into a coloring (x=1 cells black, y=1 white).
Coloring coloring_from_assignment(const IpModel& model,
                                  const std::vector<long long>& assignment);

// Name of the first constraint (or the fixed-b bound) the assignment
// violates, or nullopt if every row is satisfied.
std::optional<std::string> first_violated(const IpModel& model,
                                          const std::vector<long long>& assignment);

}  // namespace bwc
