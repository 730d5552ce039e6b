#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bwc {

enum class Piece { knight, rook, bishop, king, queen };

Piece piece_from_name(const std::string& name);
std::string piece_name(Piece p);

// 1-based (row, col), matching the usual (i,j) board convention.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;  // row-major order
};

struct BoardSpec {
    int rows;
    int cols;
    Piece piece;

    BoardSpec(int rows_, int cols_, Piece piece_);

    int cell_count() const { return rows * cols; }
    bool square() const { return rows == cols; }
    bool in_bounds(Cell c) const {
        return c.row >= 1 && c.row <= rows && c.col >= 1 && c.col <= cols;
    }
    int index_of(Cell c) const;  // row-major, 0-based; throws on out-of-range
    Cell cell_at(int index) const;
    BoardSpec transposed() const { return BoardSpec(cols, rows, piece); }
    bool same_board(const BoardSpec& o) const { return rows == o.rows && cols == o.cols; }
};

// Dense bit-per-cell set, sized by the board it was created for. Operations
// between sets of different board shapes throw std::invalid_argument.
class CellSet {
  public:
    explicit CellSet(const BoardSpec& spec) : CellSet(spec.rows, spec.cols) {}
    CellSet(int rows, int cols);

    static CellSet of(const BoardSpec& spec, std::initializer_list<Cell> cells);
    static CellSet from_cells(const BoardSpec& spec, const std::vector<Cell>& cells);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int universe() const { return rows_ * cols_; }

    bool contains(int index) const;
    bool contains(Cell c) const;
    void add(int index);
    void add(Cell c);
    void remove(int index);
    void remove(Cell c);

    int count() const;
    bool empty() const { return count() == 0; }

    CellSet& operator|=(const CellSet& o);
    CellSet& operator&=(const CellSet& o);
    CellSet& operator-=(const CellSet& o);
    friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
    friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
    friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }
    bool operator==(const CellSet& o) const;

    bool intersects(const CellSet& o) const;
    bool subset_of(const CellSet& o) const;
    CellSet complement() const;

    // Members in row-major order.
    std::vector<int> indices() const;
    std::vector<Cell> cells() const;
    int first_index() const;  // -1 when empty

    template <class F>
    void for_each_index(F f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                std::uint64_t low = bits & (~bits + 1);
                int idx = static_cast<int>(w) * 64 + bit_index(low);
                f(idx);
                bits ^= low;
            }
        }
    }

    // True when this set precedes `o` in the subset order used for canonical
    // forms: the set containing the first differing cell index is smaller.
    bool precedes(const CellSet& o) const;

  private:
    static int bit_index(std::uint64_t one_bit);
    void check_same(const CellSet& o) const;
    void check_index(int index) const;

    int rows_;
    int cols_;
    std::vector<std::uint64_t> words_;
};

// Cells reachable in one move of spec.piece. Sliding pieces use the unblocked
// line adjacency: two cells on a common row/column (rook), diagonal (bishop)
// or either (queen) are mutually attacking regardless of what sits between
// them. This is the graph adjacency the coloring problem is defined on, not
// over-the-board chess movement.
CellSet attacks(const BoardSpec& spec, Cell from);

// attacks(spec, at) plus the cell itself.
CellSet closed_neighborhood(const BoardSpec& spec, Cell at);

// Union of attacks over all members; empty set maps to empty set.
CellSet attack_closure(const BoardSpec& spec, const CellSet& cells);

// Index permutations of the board symmetry group, identity first: 4 maps for
// rectangular boards (flips and the half turn), 8 for square ones.
std::vector<std::vector<int>> symmetry_maps(const BoardSpec& spec);

// Image of a set under one symmetry map of the same board.
CellSet apply_symmetry(const CellSet& s, const std::vector<int>& map);

// Same set on the transposed board.
CellSet transpose(const BoardSpec& spec, const CellSet& s);

}  // namespace bwc
