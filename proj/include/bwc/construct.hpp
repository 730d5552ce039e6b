#pragma once

#include "bwc/coloring.hpp"
#include "bwc/formula.hpp"

namespace bwc {

// A coloring together with the value it claims and a fresh verifier report.
// Only ever built through construct()/certify(), so the certificate is
// guaranteed consistent: valid, b = w = claimed value, uncolored on target.
struct Construction {
    Coloring coloring;
    PhiResult claimed;
    VerifyReport certificate;
};

// Explicit optimal placement for knights, 3 <= m <= n (normalized), n >= 7:
// a black block of full columns on the left, a white block on the right,
// and a 2- or 3-column buffer between them (odd rows of the flanking buffer
// columns are colored when n is odd). m > n inputs are built transposed and
// mapped back. Output is canonical: same board, same placement bytes.
Construction construct(int m, int n);

// Re-verifies a coloring against a claimed value; throws std::runtime_error
// ("invalid placement" / "count mismatch ...") unless the Construction
// invariants hold.
Construction certify(const Coloring& c, const PhiResult& claimed);

}  // namespace bwc
