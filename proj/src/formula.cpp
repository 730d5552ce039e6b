#include "bwc/formula.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace bwc {

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::even_n: return "even_n";
        case Regime::odd_n: return "odd_n";
        case Regime::row1: return "row1";
        case Regime::row2: return "row2";
        case Regime::small_table: return "small_table";
    }
    throw std::invalid_argument("unknown regime");
}

namespace {

// Exact values from the separator-enumeration solver, 3 <= m <= n <= 6.
constexpr const char* kBuiltinTable =
    "3 3 3\n"
    "3 4 5\n"
    "3 5 6\n"
    "3 6 7\n"
    "4 4 6\n"
    "4 5 8\n"
    "4 6 10\n"
    "5 5 10\n"
    "5 6 12\n"
    "6 6 14\n";

}  // namespace

SmallCaseTable SmallCaseTable::from_text(const std::string& text) {
    SmallCaseTable t;
    std::istringstream in(text);
    std::string line;
    std::pair<int, int> prev{0, 0};
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int m = 0, n = 0;
        long long phi = 0;
        if (!(ls >> m >> n >> phi) || !(ls >> std::ws).eof())
            throw std::runtime_error("small case table line " + std::to_string(lineno) +
                                     ": expected 'm n phi'");
        if (m < 1 || n < m)
            throw std::runtime_error("small case table line " + std::to_string(lineno) +
                                     ": keys must satisfy 1 <= m <= n");
        std::pair<int, int> key{m, n};
        if (!(prev < key))
            throw std::runtime_error("small case table line " + std::to_string(lineno) +
                                     ": keys out of order");
        t.entries_[key] = phi;
        prev = key;
    }
    return t;
}

const SmallCaseTable& SmallCaseTable::builtin() {
    static const SmallCaseTable t = from_text(kBuiltinTable);
    return t;
}

std::optional<long long> SmallCaseTable::lookup(int m, int n) const {
    if (m > n) std::swap(m, n);
    auto it = entries_.find({m, n});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string SmallCaseTable::to_text() const {
    std::ostringstream out;
    for (const auto& [key, phi] : entries_)
        out << key.first << ' ' << key.second << ' ' << phi << '\n';
    return out.str();
}

PhiResult phi_knight(int m, int n) {
    return phi_knight(m, n, SmallCaseTable::builtin());
}

PhiResult phi_knight(int m, int n, const SmallCaseTable& table) {
    if (m < 1 || n < 1) throw std::domain_error("board dimensions must be positive");
    if (m > n) std::swap(m, n);
    PhiResult r;
    r.m = m;
    r.n = n;
    const long long mn = static_cast<long long>(m) * n;
    if (m == 1) {
        r.regime = Regime::row1;
        r.value = n / 2;
    } else if (m == 2) {
        r.regime = Regime::row2;
        r.value = n;
    } else if (n >= 7) {
        if (n % 2 == 0) {
            r.regime = Regime::even_n;
            assert((static_cast<long long>(m) * (n - 2)) % 2 == 0);
            r.value = static_cast<long long>(m) * (n - 2) / 2;
        } else {
            r.regime = Regime::odd_n;
            assert((static_cast<long long>(m) * (n - 3)) % 2 == 0);
            r.value = static_cast<long long>(m) * (n - 3) / 2 + (m + 1) / 2;
        }
    } else {
        r.regime = Regime::small_table;
        auto v = table.lookup(m, n);
        if (!v) throw std::domain_error("small case not tabulated");
        r.value = *v;
    }
    r.uncolored_target = mn - 2 * r.value;
    return r;
}

long long conjecture_value(int n) {
    if (n < 1) throw std::domain_error("board dimension must be positive");
    if (n % 2 == 0) return static_cast<long long>(n) * (n - 2) / 2;
    return static_cast<long long>(n) * (n - 3) / 2 + (n - 1) / 2;
}

long long uncolored_target(int m, int n) {
    if (m > n) std::swap(m, n);
    if (m < 3 || n < 7)
        throw std::domain_error("uncolored target defined only for 3 <= m <= n with n >= 7");
    if (m % 2 == 1 && n % 2 == 1) return 2LL * m - 1;
    return 2LL * m;
}

long long w_opt(int m, int n, long long b) {
    if (m > n) std::swap(m, n);
    long long target = uncolored_target(m, n);
    return static_cast<long long>(m) * n - b - target;
}

}  // namespace bwc
