#include "bwc/transform.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "bwc/formula.hpp"

namespace bwc {

namespace {

std::vector<int> col_counts(const BoardSpec& spec, const CellSet& black) {
    std::vector<int> cnt(static_cast<std::size_t>(spec.cols), 0);
    black.for_each_index([&](int idx) { cnt[static_cast<std::size_t>(idx % spec.cols)]++; });
    return cnt;
}

CellSet from_counts_compact(const BoardSpec& spec, const std::vector<int>& counts) {
    CellSet out(spec);
    for (int c = 0; c < spec.cols; ++c)
        for (int r = 0; r < counts[static_cast<std::size_t>(c)]; ++r)
            out.add(r * spec.cols + c);
    return out;
}

void check_board(const BoardSpec& spec, const CellSet& black) {
    if (black.rows() != spec.rows || black.cols() != spec.cols)
        throw std::invalid_argument("cell set belongs to a different board");
}

}  // namespace

CellSet fill_almost_full(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    const int m = spec.rows, n = spec.cols;
    auto cnt = col_counts(spec, black);
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (cnt[static_cast<std::size_t>(c)] == m - 1 || cnt[static_cast<std::size_t>(c)] == m - 2) {
            target = c;
            break;
        }
    if (target < 0) return black;
    auto idxs = black.indices();
    int donor = -1;
    for (auto it = idxs.rbegin(); it != idxs.rend(); ++it)
        if (cnt[static_cast<std::size_t>(*it % n)] < m - 2) {
            donor = *it;
            break;
        }
    if (donor < 0) return black;
    for (int r = m - 1; r >= 0; --r) {
        int hole = r * n + target;
        if (!black.contains(hole)) {
            CellSet out = black;
            out.remove(donor);
            out.add(hole);
            return out;
        }
    }
    return black;
}

CellSet compact_columns(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    return from_counts_compact(spec, col_counts(spec, black));
}

CellSet gather_blocks(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    const int n = spec.cols;
    auto cnt = col_counts(spec, black);
    std::vector<int> dest(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int c = 0; c < n; ++c)
        if (cnt[static_cast<std::size_t>(c)] > 0) dest[static_cast<std::size_t>(c)] = next++;
    CellSet out(spec);
    black.for_each_index([&](int idx) {
        int r = idx / n, c = idx % n;
        out.add(r * n + dest[static_cast<std::size_t>(c)]);
    });
    return out;
}

CellSet sort_columns(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    auto cnt = col_counts(spec, black);
    std::sort(cnt.begin(), cnt.end(), std::greater<int>());
    return from_counts_compact(spec, cnt);
}

CellSet fill_columns(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    CellSet sorted = sort_columns(spec, black);
    auto cnt = col_counts(spec, sorted);
    const int b = black.count();
    if (b == 0) return sorted;
    const int h = cnt[0];
    std::vector<int> out(static_cast<std::size_t>(spec.cols), 0);
    int q = b / h, r = b % h;
    for (int c = 0; c < q; ++c) out[static_cast<std::size_t>(c)] = h;
    if (r > 0) out[static_cast<std::size_t>(q)] = r;
    return from_counts_compact(spec, out);
}

namespace {

// Completes column 1 using the bottom-most blacks of the right-most columns.
// Precondition (checked by the caller): no full column yet and b >= m.
CellSet fill_leading_column(const BoardSpec& spec, const CellSet& black) {
    const int m = spec.rows, n = spec.cols;
    auto idxs = black.indices();
    std::sort(idxs.begin(), idxs.end(), [n](int a, int b) {
        return std::pair{a % n, a / n} > std::pair{b % n, b / n};
    });
    CellSet out = black;
    std::size_t next_donor = 0;
    for (int r = 0; r < m; ++r) {
        int hole = r * n;
        if (out.contains(hole)) continue;
        while (next_donor < idxs.size() && idxs[next_donor] % n == 0) ++next_donor;
        if (next_donor >= idxs.size()) break;
        out.remove(idxs[next_donor]);
        out.add(hole);
        ++next_donor;
    }
    return out;
}

}  // namespace

std::pair<CellSet, TransformTrace> normalize(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    const int m = spec.rows;
    TransformTrace trace;
    CellSet cur = black;
    trace.steps.push_back({"initial", cur, n_value(spec, cur)});

    auto step = [&](const char* name, CellSet next) {
        bool changed = !(next == cur);
        cur = std::move(next);
        trace.steps.push_back({name, cur, n_value(spec, cur)});
        return changed;
    };

    for (;;) {
        while (step("fill_almost_full", fill_almost_full(spec, cur))) {
        }
        bool changed = false;
        changed |= step("compact_columns", compact_columns(spec, cur));
        changed |= step("gather_blocks", gather_blocks(spec, cur));
        changed |= step("sort_columns", sort_columns(spec, cur));
        changed |= step("fill_columns", fill_columns(spec, cur));
        if (changed) continue;
        auto cnt = col_counts(spec, cur);
        bool has_full = std::find(cnt.begin(), cnt.end(), m) != cnt.end();
        if (!has_full && cur.count() >= m &&
            step("fill_leading_column", fill_leading_column(spec, cur)))
            continue;
        break;
    }

    trace.monotone = true;
    for (std::size_t i = 1; i < trace.steps.size(); ++i)
        if (trace.steps[i].n_value > trace.steps[i - 1].n_value) trace.monotone = false;
    return {cur, trace};
}

bool n_lower_bound_check(const BoardSpec& spec, const CellSet& black) {
    check_board(spec, black);
    const int m = std::min(spec.rows, spec.cols);
    const int n = std::max(spec.rows, spec.cols);
    if (m < 7) throw std::domain_error("lower bound check requires both dimensions >= 7");
    long long phi = phi_knight(spec.rows, spec.cols).value;
    if (black.count() != phi)
        throw std::domain_error("lower bound check requires exactly phi blacks");
    auto [result, trace] = normalize(spec, black);
    const int need = (m % 2 == 1 && n % 2 == 1) ? 2 * m - 1 : 2 * m;
    return n_value(spec, result) >= need;
}

std::string trace_report(const TransformTrace& trace) {
    std::ostringstream out;
    for (const TraceStep& s : trace.steps) out << s.name << ' ' << s.n_value << '\n';
    return out.str();
}

}  // namespace bwc
