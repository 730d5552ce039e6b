#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace bwc {

enum class Regime { even_n, odd_n, row1, row2, small_table };

std::string regime_name(Regime r);

struct PhiResult {
    long long value = 0;
    long long uncolored_target = 0;  // m*n - 2*value
    Regime regime = Regime::small_table;
    int m = 0;  // normalized so m <= n
    int n = 0;
};

// Exact balanced values for boards outside the closed-form regimes, keyed by
// normalized (m, n). Persisted as "m n phi" lines in strictly increasing key
// order; every value comes from the exact solver, none are hand-entered.
class SmallCaseTable {
  public:
    static SmallCaseTable from_text(const std::string& text);
    static const SmallCaseTable& builtin();

    std::optional<long long> lookup(int m, int n) const;
    std::string to_text() const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  private:
    std::map<std::pair<int, int>, long long> entries_;
};

// Optimal balanced value for knights on an m x n board. Inputs are swapped
// internally so m <= n. Regimes: one row, two rows, the closed form for
// m >= 3 with n >= 7 (even/odd n), and the exact table for both dims <= 6.
PhiResult phi_knight(int m, int n);
PhiResult phi_knight(int m, int n, const SmallCaseTable& table);

// The conjectured square-board value, evaluated verbatim: n(n-2)/2 for even
// n, n(n-3)/2 + (n-1)/2 for odd n. Wrong for odd n >= 5; kept for comparison.
long long conjecture_value(int n);

// Uncolored-cell count of the optimal construction: 2m-1 when both dims are
// odd, 2m otherwise. Defined for 3 <= m <= n, n >= 7 (after normalization).
long long uncolored_target(int m, int n);

// Best white count for a fixed black count b on the same regime:
// m*n - b - uncolored_target(m, n).
long long w_opt(int m, int n, long long b);

}  // namespace bwc
