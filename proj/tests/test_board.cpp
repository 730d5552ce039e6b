#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bwc/board.hpp"

using namespace bwc;

namespace {

BoardSpec knight_board(int m, int n) { return BoardSpec(m, n, Piece::knight); }

std::set<std::pair<int, int>> as_pairs(const CellSet& s) {
    std::set<std::pair<int, int>> out;
    for (Cell c : s.cells()) out.insert({c.row, c.col});
    return out;
}

}  // namespace

TEST_CASE("piece names round-trip") {
    for (Piece p : {Piece::knight, Piece::rook, Piece::bishop, Piece::king, Piece::queen})
        CHECK(piece_from_name(piece_name(p)) == p);
    CHECK_THROWS_AS(piece_from_name("pawn"), std::invalid_argument);
}

TEST_CASE("board spec validation and indexing") {
    CHECK_THROWS_AS(BoardSpec(0, 5, Piece::knight), std::invalid_argument);
    CHECK_THROWS_AS(BoardSpec(3, -1, Piece::knight), std::invalid_argument);
    BoardSpec spec = knight_board(3, 5);
    CHECK(spec.cell_count() == 15);
    CHECK(spec.index_of(Cell{1, 1}) == 0);
    CHECK(spec.index_of(Cell{3, 5}) == 14);
    CHECK(spec.index_of(Cell{2, 3}) == 7);
    for (int i = 0; i < 15; ++i) CHECK(spec.index_of(spec.cell_at(i)) == i);
    CHECK_THROWS_WITH_AS(spec.index_of(Cell{4, 1}), "cell out of range", std::out_of_range);
    CHECK_THROWS_WITH_AS(spec.index_of(Cell{1, 0}), "cell out of range", std::out_of_range);
    CHECK_THROWS_AS(spec.cell_at(15), std::out_of_range);
}

TEST_CASE("knight attacks: corner, interior, single row") {
    BoardSpec b8 = knight_board(8, 8);
    CHECK(as_pairs(attacks(b8, Cell{1, 1})) ==
          std::set<std::pair<int, int>>{{2, 3}, {3, 2}});
    CHECK(as_pairs(attacks(b8, Cell{4, 4})) ==
          std::set<std::pair<int, int>>{
              {2, 3}, {2, 5}, {3, 2}, {3, 6}, {5, 2}, {5, 6}, {6, 3}, {6, 5}});
    BoardSpec row = knight_board(1, 9);
    for (int c = 1; c <= 9; ++c) CHECK(attacks(row, Cell{1, c}).empty());
    CHECK_THROWS_WITH_AS(attacks(b8, Cell{9, 1}), "cell out of range", std::out_of_range);
}

TEST_CASE("knight degree table on 8x8") {
    BoardSpec b8 = knight_board(8, 8);
    CHECK(attacks(b8, Cell{1, 1}).count() == 2);  // corner
    CHECK(attacks(b8, Cell{1, 2}).count() == 3);
    CHECK(attacks(b8, Cell{2, 2}).count() == 4);
    CHECK(attacks(b8, Cell{1, 3}).count() == 4);
    CHECK(attacks(b8, Cell{3, 3}).count() == 8);
    CHECK(attacks(b8, Cell{4, 4}).count() == 8);  // interior
    int degree_counts[9] = {};
    for (int i = 0; i < 64; ++i) degree_counts[attacks(b8, b8.cell_at(i)).count()]++;
    CHECK(degree_counts[2] == 4);
    CHECK(degree_counts[8] == 16);
}

TEST_CASE("closed neighborhood") {
    BoardSpec b8 = knight_board(8, 8);
    CHECK(as_pairs(closed_neighborhood(b8, Cell{1, 1})) ==
          std::set<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 2}});
    BoardSpec b2 = knight_board(2, 2);
    CHECK(as_pairs(closed_neighborhood(b2, Cell{1, 1})) ==
          std::set<std::pair<int, int>>{{1, 1}});
    BoardSpec b7 = knight_board(7, 7);
    CHECK(closed_neighborhood(b7, Cell{4, 4}).count() == 9);
}

TEST_CASE("attack symmetry, exhaustive on small boards") {
    for (auto [m, n] : {std::pair{3, 3}, {5, 7}, {8, 8}, {10, 10}, {2, 9}, {1, 6}}) {
        for (Piece p : {Piece::knight, Piece::rook, Piece::bishop, Piece::king, Piece::queen}) {
            BoardSpec spec(m, n, p);
            for (int i = 0; i < spec.cell_count(); ++i) {
                CellSet from_i = attacks(spec, spec.cell_at(i));
                CHECK_FALSE(from_i.contains(i));  // no self-attack
                from_i.for_each_index([&](int j) {
                    CHECK(attacks(spec, spec.cell_at(j)).contains(i));
                });
            }
        }
    }
}

TEST_CASE("sliding pieces use unblocked line adjacency") {
    BoardSpec rook(4, 4, Piece::rook);
    CHECK(attacks(rook, Cell{1, 1}).count() == 6);  // whole row + column
    CHECK(attacks(rook, Cell{1, 1}).contains(Cell{1, 4}));
    BoardSpec bishop(4, 4, Piece::bishop);
    CHECK(attacks(bishop, Cell{1, 1}).contains(Cell{4, 4}));
    CHECK(attacks(bishop, Cell{1, 1}).count() == 3);
    BoardSpec queen(4, 4, Piece::queen);
    CHECK(attacks(queen, Cell{1, 1}).count() == 9);
    BoardSpec king(3, 3, Piece::king);
    CHECK(attacks(king, Cell{2, 2}).count() == 8);
    CHECK(attacks(king, Cell{1, 1}).count() == 3);
}

TEST_CASE("attack closure") {
    BoardSpec b7 = knight_board(7, 7);
    CHECK(attack_closure(b7, CellSet(b7)).empty());
    CellSet col1(b7);
    for (int r = 1; r <= 7; ++r) col1.add(Cell{r, 1});
    CellSet closure = attack_closure(b7, col1);
    CellSet cols23(b7);
    for (int r = 1; r <= 7; ++r) {
        cols23.add(Cell{r, 2});
        cols23.add(Cell{r, 3});
    }
    CHECK((closure - col1) == cols23);
    BoardSpec b8 = knight_board(8, 8);
    CHECK(as_pairs(attack_closure(b8, CellSet::of(b8, {Cell{1, 1}}))) ==
          std::set<std::pair<int, int>>{{2, 3}, {3, 2}});
}

TEST_CASE("cell set operations") {
    BoardSpec spec = knight_board(3, 4);
    CellSet a = CellSet::of(spec, {Cell{1, 1}, Cell{2, 3}});
    CellSet b = CellSet::of(spec, {Cell{2, 3}, Cell{3, 4}});
    CHECK((a | b).count() == 3);
    CHECK((a & b).count() == 1);
    CHECK((a - b).count() == 1);
    CHECK(a.intersects(b));
    CHECK((a & b).subset_of(a));
    CHECK(a.complement().count() == 10);
    CHECK((a.complement() & a).empty());
    CHECK(a.cells() == std::vector<Cell>{Cell{1, 1}, Cell{2, 3}});
    CHECK(a.first_index() == 0);
    CHECK(CellSet(spec).first_index() == -1);
    a.remove(Cell{1, 1});
    CHECK(a.count() == 1);
    CHECK_THROWS_AS(a.add(Cell{4, 1}), std::out_of_range);
    CHECK_THROWS_AS(a.add(99), std::out_of_range);
}

TEST_CASE("mixing sets from different boards is an error") {
    CellSet a(3, 4);
    CellSet b(4, 3);
    CHECK_THROWS_AS(a |= b, std::invalid_argument);
    CHECK_THROWS_AS(a.intersects(b), std::invalid_argument);
    BoardSpec spec = knight_board(5, 5);
    CHECK_THROWS_AS(attack_closure(spec, a), std::invalid_argument);
}

TEST_CASE("precedes orders by first differing cell") {
    BoardSpec spec = knight_board(3, 3);
    CellSet a = CellSet::of(spec, {Cell{1, 1}});
    CellSet b = CellSet::of(spec, {Cell{1, 2}});
    CHECK(a.precedes(b));
    CHECK_FALSE(b.precedes(a));
    CHECK_FALSE(a.precedes(a));
}

TEST_CASE("symmetry maps: group size, permutation, equivariance") {
    for (auto [m, n] : {std::pair{3, 5}, {4, 4}, {7, 7}, {6, 8}}) {
        BoardSpec spec = knight_board(m, n);
        auto maps = symmetry_maps(spec);
        CHECK(maps.size() == (spec.square() ? 8u : 4u));
        for (int i = 0; i < spec.cell_count(); ++i) CHECK(maps[0][i] == i);  // identity first
        for (const auto& map : maps) {
            std::set<int> image(map.begin(), map.end());
            CHECK(static_cast<int>(image.size()) == spec.cell_count());
            // attacks commute with the symmetry
            for (int i = 0; i < spec.cell_count(); ++i) {
                CellSet lhs = apply_symmetry(attacks(spec, spec.cell_at(i)), map);
                CellSet rhs = attacks(spec, spec.cell_at(map[i]));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("transpose maps cells across boards") {
    BoardSpec spec = knight_board(3, 5);
    CellSet s = CellSet::of(spec, {Cell{1, 2}, Cell{3, 5}});
    CellSet t = transpose(spec, s);
    CHECK(t.rows() == 5);
    CHECK(t.cols() == 3);
    CHECK(t.contains(Cell{2, 1}));
    CHECK(t.contains(Cell{5, 3}));
    CHECK(transpose(spec.transposed(), t) == s);
}
