#include "bwc/board.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace bwc {

Piece piece_from_name(const std::string& name) {
    if (name == "knight") return Piece::knight;
    if (name == "rook") return Piece::rook;
    if (name == "bishop") return Piece::bishop;
    if (name == "king") return Piece::king;
    if (name == "queen") return Piece::queen;
    throw std::invalid_argument("unknown piece: " + name);
}

std::string piece_name(Piece p) {
    switch (p) {
        case Piece::knight: return "knight";
        case Piece::rook: return "rook";
        case Piece::bishop: return "bishop";
        case Piece::king: return "king";
        case Piece::queen: return "queen";
    }
    throw std::invalid_argument("unknown piece");
}

BoardSpec::BoardSpec(int rows_, int cols_, Piece piece_)
    : rows(rows_), cols(cols_), piece(piece_) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("board dimensions must be positive");
}

int BoardSpec::index_of(Cell c) const {
    if (!in_bounds(c)) throw std::out_of_range("cell out of range");
    return (c.row - 1) * cols + (c.col - 1);
}

Cell BoardSpec::cell_at(int index) const {
    if (index < 0 || index >= cell_count()) throw std::out_of_range("cell out of range");
    return Cell{index / cols + 1, index % cols + 1};
}

CellSet::CellSet(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("board dimensions must be positive");
    words_.assign((static_cast<std::size_t>(rows) * cols + 63) / 64, 0);
}

CellSet CellSet::of(const BoardSpec& spec, std::initializer_list<Cell> cells) {
    CellSet s(spec);
    for (Cell c : cells) s.add(spec.index_of(c));
    return s;
}

CellSet CellSet::from_cells(const BoardSpec& spec, const std::vector<Cell>& cells) {
    CellSet s(spec);
    for (Cell c : cells) s.add(spec.index_of(c));
    return s;
}

int CellSet::bit_index(std::uint64_t one_bit) {
    return std::countr_zero(one_bit);
}

void CellSet::check_same(const CellSet& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("cell sets belong to different boards");
}

void CellSet::check_index(int index) const {
    if (index < 0 || index >= universe()) throw std::out_of_range("cell out of range");
}

bool CellSet::contains(int index) const {
    check_index(index);
    return (words_[index / 64] >> (index % 64)) & 1u;
}

bool CellSet::contains(Cell c) const {
    return contains((c.row - 1) * cols_ + (c.col - 1));
}

void CellSet::add(int index) {
    check_index(index);
    words_[index / 64] |= std::uint64_t{1} << (index % 64);
}

void CellSet::add(Cell c) {
    if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_)
        throw std::out_of_range("cell out of range");
    add((c.row - 1) * cols_ + (c.col - 1));
}

void CellSet::remove(int index) {
    check_index(index);
    words_[index / 64] &= ~(std::uint64_t{1} << (index % 64));
}

void CellSet::remove(Cell c) {
    if (c.row < 1 || c.row > rows_ || c.col < 1 || c.col > cols_)
        throw std::out_of_range("cell out of range");
    remove((c.row - 1) * cols_ + (c.col - 1));
}

int CellSet::count() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

CellSet& CellSet::operator|=(const CellSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

CellSet& CellSet::operator&=(const CellSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

CellSet& CellSet::operator-=(const CellSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

bool CellSet::operator==(const CellSet& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
}

bool CellSet::intersects(const CellSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool CellSet::subset_of(const CellSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

CellSet CellSet::complement() const {
    CellSet r(rows_, cols_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    int tail = universe() % 64;
    if (tail != 0) r.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return r;
}

std::vector<int> CellSet::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each_index([&](int idx) { out.push_back(idx); });
    return out;
}

std::vector<Cell> CellSet::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each_index([&](int idx) { out.push_back(Cell{idx / cols_ + 1, idx % cols_ + 1}); });
    return out;
}

int CellSet::first_index() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w) * 64 + std::countr_zero(words_[w]);
    return -1;
}

bool CellSet::precedes(const CellSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t diff = words_[i] ^ o.words_[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (words_[i] & low) != 0;
        }
    }
    return false;
}

namespace {

void add_offsets(const BoardSpec& spec, Cell from, CellSet& out,
                 const int (*offsets)[2], int n) {
    for (int i = 0; i < n; ++i) {
        Cell to{from.row + offsets[i][0], from.col + offsets[i][1]};
        if (spec.in_bounds(to)) out.add(to);
    }
}

void add_rays(const BoardSpec& spec, Cell from, CellSet& out,
              const int (*dirs)[2], int n) {
    for (int i = 0; i < n; ++i) {
        Cell to{from.row + dirs[i][0], from.col + dirs[i][1]};
        while (spec.in_bounds(to)) {
            out.add(to);
            to.row += dirs[i][0];
            to.col += dirs[i][1];
        }
    }
}

}  // namespace

CellSet attacks(const BoardSpec& spec, Cell from) {
    if (!spec.in_bounds(from)) throw std::out_of_range("cell out of range");
    CellSet out(spec);
    static const int knight_offsets[8][2] = {{-2, -1}, {-2, 1}, {-1, -2}, {-1, 2},
                                             {1, -2},  {1, 2},  {2, -1},  {2, 1}};
    static const int king_offsets[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                           {0, 1},   {1, -1}, {1, 0},  {1, 1}};
    static const int rook_dirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    static const int bishop_dirs[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    switch (spec.piece) {
        case Piece::knight:
            add_offsets(spec, from, out, knight_offsets, 8);
            break;
        case Piece::king:
            add_offsets(spec, from, out, king_offsets, 8);
            break;
        case Piece::rook:
            add_rays(spec, from, out, rook_dirs, 4);
            break;
        case Piece::bishop:
            add_rays(spec, from, out, bishop_dirs, 4);
            break;
        case Piece::queen:
            add_rays(spec, from, out, rook_dirs, 4);
            add_rays(spec, from, out, bishop_dirs, 4);
            break;
    }
    return out;
}

CellSet closed_neighborhood(const BoardSpec& spec, Cell at) {
    CellSet out = attacks(spec, at);
    out.add(at);
    return out;
}

CellSet attack_closure(const BoardSpec& spec, const CellSet& cells) {
    if (cells.rows() != spec.rows || cells.cols() != spec.cols)
        throw std::invalid_argument("cell set belongs to a different board");
    CellSet out(spec);
    cells.for_each_index([&](int idx) { out |= attacks(spec, spec.cell_at(idx)); });
    return out;
}

std::vector<std::vector<int>> symmetry_maps(const BoardSpec& spec) {
    const int m = spec.rows, n = spec.cols;
    auto make = [&](auto f) {
        std::vector<int> map(static_cast<std::size_t>(m) * n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) {
                auto [rr, cc] = f(r, c);
                map[static_cast<std::size_t>(r) * n + c] = rr * n + cc;
            }
        return map;
    };
    std::vector<std::vector<int>> maps;
    maps.push_back(make([&](int r, int c) { return std::pair{r, c}; }));
    maps.push_back(make([&](int r, int c) { return std::pair{r, n - 1 - c}; }));
    maps.push_back(make([&](int r, int c) { return std::pair{m - 1 - r, c}; }));
    maps.push_back(make([&](int r, int c) { return std::pair{m - 1 - r, n - 1 - c}; }));
    if (spec.square()) {
        maps.push_back(make([&](int r, int c) { return std::pair{c, r}; }));
        maps.push_back(make([&](int r, int c) { return std::pair{c, m - 1 - r}; }));
        maps.push_back(make([&](int r, int c) { return std::pair{n - 1 - c, r}; }));
        maps.push_back(make([&](int r, int c) { return std::pair{n - 1 - c, m - 1 - r}; }));
    }
    return maps;
}

CellSet apply_symmetry(const CellSet& s, const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(s.universe()))
        throw std::invalid_argument("symmetry map does not match board");
    CellSet out(s.rows(), s.cols());
    s.for_each_index([&](int idx) { out.add(map[static_cast<std::size_t>(idx)]); });
    return out;
}

CellSet transpose(const BoardSpec& spec, const CellSet& s) {
    if (s.rows() != spec.rows || s.cols() != spec.cols)
        throw std::invalid_argument("cell set belongs to a different board");
    CellSet out(spec.cols, spec.rows);
    s.for_each_index([&](int idx) {
        int r = idx / spec.cols, c = idx % spec.cols;
        out.add(c * spec.rows + r);
    });
    return out;
}

}  // namespace bwc
