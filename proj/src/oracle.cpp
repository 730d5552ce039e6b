#include "bwc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bwc {

CellSet canonicalize(const BoardSpec& spec, const CellSet& cells) {
    if (cells.rows() != spec.rows || cells.cols() != spec.cols)
        throw std::invalid_argument("cell set belongs to a different board");
    auto maps = symmetry_maps(spec);
    CellSet best = cells;
    for (std::size_t i = 1; i < maps.size(); ++i) {
        CellSet img = apply_symmetry(cells, maps[i]);
        if (img.precedes(best)) best = img;
    }
    return best;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kGuardCells = 30;           // budget-free exhaustion limit
constexpr long long kFixedBGuard = 50'000'000;

int high_bit(u128 x) {
    u64 hi = static_cast<u64>(x >> 64);
    if (hi) return 64 + 63 - std::countl_zero(hi);
    return 63 - std::countl_zero(static_cast<u64>(x));
}

// C(n, k) for n <= 64 fits in u64 (max C(64,32) < 2^61).
struct Binomials {
    u64 c[65][65] = {};
    Binomials() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const Binomials& binom() {
    static const Binomials b;
    return b;
}

// Subset of colex rank r among u-subsets of {0..cells-1}.
void unrank_colex(u64 r, int u, int cells, int* idx) {
    const Binomials& B = binom();
    for (int i = u; i >= 1; --i) {
        int v = i - 1;
        while (v + 1 < cells && B.c[v + 1][i] <= r) ++v;
        idx[i - 1] = v;
        r -= B.c[v][i];
    }
}

void next_colex(int* idx, int u, u64& mask) {
    int i = 0;
    while (i + 1 < u && idx[i] + 1 == idx[i + 1]) ++i;
    mask ^= u64{1} << idx[i];
    for (int j = 0; j < i; ++j) {
        mask &= ~(u64{1} << idx[j]);
        idx[j] = j;
        mask |= u64{1} << j;
    }
    ++idx[i];
    mask |= u64{1} << idx[i];
}

struct Engine {
    BoardSpec spec;
    int cells;
    u64 all;
    std::vector<u64> atk;
    std::vector<std::vector<int>> maps;  // identity first

    explicit Engine(const BoardSpec& s) : spec(s), cells(s.cell_count()) {
        if (cells > 64)
            throw std::runtime_error("board too large for the exact engine (over 64 cells)");
        all = cells == 64 ? ~u64{0} : (u64{1} << cells) - 1;
        atk.resize(static_cast<std::size_t>(cells));
        for (int i = 0; i < cells; ++i) {
            u64 m = 0;
            attacks(spec, spec.cell_at(i)).for_each_index([&](int j) { m |= u64{1} << j; });
            atk[static_cast<std::size_t>(i)] = m;
        }
        maps = symmetry_maps(spec);
    }

    u64 map_mask(u64 mask, const std::vector<int>& map) const {
        u64 out = 0;
        while (mask) {
            int i = std::countr_zero(mask);
            mask &= mask - 1;
            out |= u64{1} << map[static_cast<std::size_t>(i)];
        }
        return out;
    }

    // Mask-lex order: the set holding the lowest differing cell index is
    // smaller. Rejects masks that are not their orbit's minimum.
    bool is_canonical(u64 mask) const {
        for (std::size_t g = 1; g < maps.size(); ++g) {
            u64 img = map_mask(mask, maps[g]);
            u64 d = img ^ mask;
            if (d && (img & (d & (~d + 1)))) return false;
        }
        return true;
    }

    static bool mask_precedes(u64 a, u64 b) {
        u64 d = a ^ b;
        return d && (a & (d & (~d + 1)));
    }

    // Orbit-invariant representative of a (black, separator) pair: the
    // lexicographically least (image of black, image of separator).
    std::pair<u64, u64> canon_pair(u64 black, u64 sep) const {
        u64 bb = map_mask(black, maps[0]), bs = map_mask(sep, maps[0]);
        for (std::size_t g = 1; g < maps.size(); ++g) {
            u64 ib = map_mask(black, maps[g]);
            if (mask_precedes(bb, ib)) continue;
            u64 is = map_mask(sep, maps[g]);
            if (mask_precedes(ib, bb) || mask_precedes(is, bs)) {
                bb = ib;
                bs = is;
            }
        }
        return {bb, bs};
    }

    u64 canon_mask(u64 mask) const {
        u64 best = mask;
        for (std::size_t g = 1; g < maps.size(); ++g) {
            u64 img = map_mask(mask, maps[g]);
            if (mask_precedes(img, best)) best = img;
        }
        return best;
    }

    u64 closure(u64 mask) const {
        u64 out = 0;
        u64 rest = mask;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            out |= atk[static_cast<std::size_t>(i)];
        }
        return out;
    }

    CellSet to_cellset(u64 mask) const {
        CellSet s(spec);
        while (mask) {
            int i = std::countr_zero(mask);
            mask &= mask - 1;
            s.add(i);
        }
        return s;
    }

    // Best two-way split of the components of `free`: the larger achievable
    // side sum that does not exceed half. Optionally reconstructs the mask
    // of the smaller (black) side.
    int split_value(u64 free, u64* black_out) const {
        u64 comps[64];
        int sizes[64];
        int k = 0;
        u64 rem = free;
        while (rem) {
            u64 low = rem & (~rem + 1);
            u64 comp = low, frontier = low;
            while (frontier) {
                u64 nxt = 0, f = frontier;
                while (f) {
                    int i = std::countr_zero(f);
                    f &= f - 1;
                    nxt |= atk[static_cast<std::size_t>(i)];
                }
                nxt &= free & ~comp;
                comp |= nxt;
                frontier = nxt;
            }
            comps[k] = comp;
            sizes[k] = std::popcount(comp);
            ++k;
            rem &= ~comp;
        }
        const int half = std::popcount(free) / 2;
        u128 reach[65];
        reach[0] = 1;
        for (int i = 0; i < k; ++i) reach[i + 1] = reach[i] | (reach[i] << sizes[i]);
        u128 below = reach[k] & ((u128{1} << (half + 1)) - 1);
        int best = high_bit(below);
        if (black_out) {
            int s = best;
            u64 black = 0;
            for (int i = k; i >= 1; --i) {
                if ((reach[i - 1] >> s) & 1) continue;  // component i on the white side
                black |= comps[i - 1];
                s -= sizes[i - 1];
            }
            *black_out = black;
        }
        return best;
    }
};

struct Candidate {
    long long value = -1;
    u64 black = 0;
    u64 sep = 0;

    // Total order: higher value first, then lex-least canonical pair.
    bool better_than(const Candidate& o) const {
        if (value != o.value) return value > o.value;
        if (black != o.black) return Engine::mask_precedes(black, o.black);
        return Engine::mask_precedes(sep, o.sep);
    }
};

struct WorkerOut {
    Candidate cand;      // canonical-pair form, only improvements over base
    long long evaluated = 0;
    bool quota_hit = false;
};

struct LevelContext {
    const Engine* eng;
    int u;
    long long base_value;  // best from earlier levels
    bool pruning;
    std::atomic<bool>* time_abort;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;
};

void run_range(const LevelContext& ctx, u64 lo, u64 hi, long long quota, WorkerOut& out) {
    const Engine& eng = *ctx.eng;
    int idx[64];
    unrank_colex(lo, ctx.u, eng.cells, idx);
    u64 mask = 0;
    for (int i = 0; i < ctx.u; ++i) mask |= u64{1} << idx[i];

    Candidate best;
    best.value = ctx.base_value;
    bool has_local = false;
    long long tick = 0;

    for (u64 r = lo; r < hi; ++r, ++tick) {
        if ((tick & 0x1fff) == 0) {
            if (ctx.time_abort->load(std::memory_order_relaxed)) break;
            if (ctx.has_deadline && std::chrono::steady_clock::now() >= ctx.deadline) {
                ctx.time_abort->store(true, std::memory_order_relaxed);
                break;
            }
        }
        u64 cur = mask;
        if (r + 1 < hi) next_colex(idx, ctx.u, mask);
        if (ctx.pruning && !eng.is_canonical(cur)) continue;
        if (out.evaluated >= quota) {
            out.quota_hit = true;
            break;
        }
        ++out.evaluated;
        u64 free = eng.all & ~cur;
        int v = eng.split_value(free, nullptr);
        const bool improves = v > best.value;
        if (improves || (has_local && v == best.value)) {
            u64 blk = 0;
            eng.split_value(free, &blk);
            auto [cb, cs] = eng.canon_pair(blk, cur);
            Candidate c{v, cb, cs};
            if (improves || c.better_than(best)) {
                best = c;
                has_local = true;
            }
        }
    }
    if (has_local) out.cand = best;
}

SolveResult finish(const Engine& eng, long long value, u64 black, u64 sep, int sep_size,
                   long long explored, bool proven) {
    u64 white = eng.all & ~sep & ~black;
    SolveResult res{value, Coloring(eng.spec, eng.to_cellset(black), eng.to_cellset(white)),
                    sep_size, explored, proven};
    return res;
}

}  // namespace

SolveResult solve_balanced(const BoardSpec& spec, const SearchBudget& budget, int threads,
                           bool symmetry_pruning) {
    Engine eng(spec);
    if (eng.cells > kGuardCells && !budget.any())
        throw std::runtime_error("board too large; set a search budget");
    threads = std::clamp(threads, 1, 64);

    const auto start = std::chrono::steady_clock::now();
    const bool has_deadline = budget.time_limit_seconds.has_value();
    const auto deadline =
        has_deadline ? start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(*budget.time_limit_seconds))
                     : start;
    const long long node_budget = budget.max_nodes.value_or(LLONG_MAX);
    const int max_u = budget.max_separator_size
                          ? std::clamp(*budget.max_separator_size, 0, eng.cells)
                          : eng.cells;

    Candidate best;
    int best_u = 0;
    long long explored = 0;
    bool proven = false;
    bool aborted = false;
    std::atomic<bool> time_abort{false};

    for (int u = 0; u <= eng.cells; ++u) {
        if (static_cast<long long>(eng.cells - u) / 2 <= best.value) {
            proven = true;
            break;
        }
        if (u > max_u) {
            aborted = true;
            break;
        }
        if (explored >= node_budget) {
            aborted = true;
            break;
        }

        const u64 level_size = binom().c[eng.cells][u];
        const long long remaining = node_budget == LLONG_MAX ? LLONG_MAX : node_budget - explored;
        const int nw = static_cast<int>(
            std::min<u64>(static_cast<u64>(threads), std::max<u64>(level_size, 1)));

        LevelContext ctx{&eng,        u,       best.value, symmetry_pruning,
                         &time_abort, deadline, has_deadline};
        std::vector<WorkerOut> outs(static_cast<std::size_t>(nw));
        auto quota_for = [&](int w) {
            if (remaining == LLONG_MAX) return LLONG_MAX;
            long long q = remaining / nw + (w < remaining % nw ? 1 : 0);
            return q;
        };
        if (nw == 1) {
            run_range(ctx, 0, level_size, quota_for(0), outs[0]);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(nw));
            for (int w = 0; w < nw; ++w) {
                u64 lo = static_cast<u64>(static_cast<u128>(level_size) * w / nw);
                u64 hi = static_cast<u64>(static_cast<u128>(level_size) * (w + 1) / nw);
                pool.emplace_back(run_range, std::cref(ctx), lo, hi, quota_for(w),
                                  std::ref(outs[static_cast<std::size_t>(w)]));
            }
            for (auto& t : pool) t.join();
        }

        bool level_quota_hit = false;
        Candidate level_best = best;
        bool improved = false;
        for (const WorkerOut& o : outs) {
            explored += o.evaluated;
            level_quota_hit = level_quota_hit || o.quota_hit;
            if (o.cand.value > best.value &&
                (!improved || o.cand.better_than(level_best))) {
                level_best = o.cand;
                improved = true;
            }
        }
        if (improved) {
            best = level_best;
            best_u = u;
        }
        if (time_abort.load() || level_quota_hit) {
            aborted = true;
            break;
        }
    }
    if (!aborted && !proven) proven = true;  // loop ran off the end: full exhaustion

    if (best.value < 0)
        return finish(eng, 0, 0, eng.all, eng.cells, explored, false);
    return finish(eng, best.value, best.black, best.sep, best_u, explored, proven);
}

SolveResult solve_fixed_b(const BoardSpec& spec, int b, const SearchBudget& budget) {
    Engine eng(spec);
    if (b < 0 || b > eng.cells) throw std::invalid_argument("black count out of range");
    const u64 level_size = binom().c[eng.cells][b];
    if (!budget.any() && level_size > static_cast<u64>(kFixedBGuard))
        throw std::runtime_error("board too large; set a search budget");

    const auto start = std::chrono::steady_clock::now();
    const bool has_deadline = budget.time_limit_seconds.has_value();
    const auto deadline =
        has_deadline ? start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(*budget.time_limit_seconds))
                     : start;
    const long long node_budget = budget.max_nodes.value_or(LLONG_MAX);

    int idx[64];
    unrank_colex(0, b, eng.cells, idx);
    u64 mask = 0;
    for (int i = 0; i < b; ++i) mask |= u64{1} << idx[i];

    long long best_w = -1;
    u64 best_black = 0;
    long long explored = 0;
    bool aborted = false;

    for (u64 r = 0; r < level_size; ++r) {
        if ((r & 0x1fff) == 0 && has_deadline &&
            std::chrono::steady_clock::now() >= deadline) {
            aborted = true;
            break;
        }
        u64 cur = mask;
        if (r + 1 < level_size) next_colex(idx, b, mask);
        if (!eng.is_canonical(cur)) continue;
        if (explored >= node_budget) {
            aborted = true;
            break;
        }
        ++explored;
        u64 forced = eng.closure(cur) & ~cur;
        long long w = eng.cells - b - std::popcount(forced);
        if (w > best_w) {
            best_w = w;
            best_black = eng.canon_mask(cur);
        } else if (w == best_w) {
            u64 cb = eng.canon_mask(cur);
            if (Engine::mask_precedes(cb, best_black)) best_black = cb;
        }
    }

    if (best_w < 0) return finish(eng, 0, 0, eng.all, eng.cells, explored, false);
    u64 forced = eng.closure(best_black) & ~best_black;
    u64 white = eng.all & ~best_black & ~forced;
    SolveResult res{best_w,
                    Coloring(eng.spec, eng.to_cellset(best_black), eng.to_cellset(white)),
                    std::popcount(forced), explored, !aborted};
    return res;
}

}  // namespace bwc
