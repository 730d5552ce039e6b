#include "bwc/construct.hpp"

#include <sstream>
#include <stdexcept>

namespace bwc {

namespace {

void add_full_column(const BoardSpec& spec, CellSet& s, int col) {
    for (int r = 1; r <= spec.rows; ++r) s.add(Cell{r, col});
}

void add_odd_rows(const BoardSpec& spec, CellSet& s, int col) {
    for (int r = 1; r <= spec.rows; r += 2) s.add(Cell{r, col});
}

}  // namespace

Construction construct(int m, int n) {
    const bool transposed = m > n;
    if (transposed) std::swap(m, n);
    if (m < 3 || n < 7) throw std::domain_error("use oracle for small boards");

    BoardSpec spec(m, n, Piece::knight);
    CellSet black(spec), white(spec);
    if (n % 2 == 0) {
        const int k = (n - 2) / 2;
        for (int c = 1; c <= k; ++c) add_full_column(spec, black, c);
        for (int c = k + 3; c <= n; ++c) add_full_column(spec, white, c);
    } else {
        const int k = (n - 3) / 2;
        for (int c = 1; c <= k; ++c) add_full_column(spec, black, c);
        add_odd_rows(spec, black, k + 1);
        add_odd_rows(spec, white, k + 3);
        for (int c = k + 4; c <= n; ++c) add_full_column(spec, white, c);
    }

    PhiResult claimed = phi_knight(m, n);
    if (transposed) {
        BoardSpec tspec = spec.transposed();
        return certify(Coloring(tspec, transpose(spec, black), transpose(spec, white)),
                       claimed);
    }
    return certify(Coloring(spec, std::move(black), std::move(white)), claimed);
}

Construction certify(const Coloring& c, const PhiResult& claimed) {
    VerifyReport report = verify(c);
    if (!report.valid) {
        std::ostringstream msg;
        msg << "invalid placement: black (" << report.violation->first.row << ","
            << report.violation->first.col << ") attacks white ("
            << report.violation->second.row << "," << report.violation->second.col << ")";
        throw std::runtime_error(msg.str());
    }
    if (report.black != claimed.value || report.white != claimed.value ||
        report.uncolored != claimed.uncolored_target) {
        std::ostringstream msg;
        msg << "count mismatch: got b=" << report.black << " w=" << report.white
            << " uncolored=" << report.uncolored << ", claimed b=w=" << claimed.value
            << " uncolored=" << claimed.uncolored_target;
        throw std::runtime_error(msg.str());
    }
    return Construction{c, claimed, report};
}

}  // namespace bwc
