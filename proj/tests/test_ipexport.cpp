#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bwc/construct.hpp"
#include "bwc/ipexport.hpp"

using namespace bwc;

namespace {

BoardSpec kb(int m, int n) { return BoardSpec(m, n, Piece::knight); }

Coloring random_coloring(const BoardSpec& spec, std::mt19937& rng) {
    CellSet black(spec);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < spec.cell_count(); ++i)
        if (coin(rng)) black.add(i);
    auto [w, white] = max_white(spec, black);
    return Coloring(spec, black, white);
}

}  // namespace

TEST_CASE("model shape follows the board size") {
    IpModel small = build_ip(kb(2, 3));
    CHECK(small.variables.size() == 15);
    CHECK(small.constraints.size() == 10);
    CHECK(small.constraints[0].name == "balB");
    CHECK(small.constraints[1].name == "balW");
    CHECK(small.constraints[2].name == "minB");
    CHECK(small.constraints[3].name == "minW");
    CHECK(small.constraints[4].name == "nbhd_1_1");
    CHECK(small.constraints[9].name == "nbhd_2_3");

    IpModel big = build_ip(kb(8, 8));
    CHECK(big.variables.size() == 131);
    CHECK(big.constraints.size() == 68);
}

TEST_CASE("edgeless boards get singleton closed neighborhoods") {
    IpModel m12 = build_ip(kb(1, 2));
    for (int i = 4; i <= 5; ++i) {
        const IpConstraint& row = m12.constraints[i];
        CHECK(row.rhs == 1);
        CHECK(row.terms.size() == 2);  // own y plus own x
        CHECK(row.sense == 'L');
    }
}

TEST_CASE("neighborhood rows carry the closed neighborhood") {
    BoardSpec spec = kb(4, 4);
    IpModel model = build_ip(spec);
    for (int i = 0; i < spec.cell_count(); ++i) {
        const IpConstraint& row = model.constraints[4 + i];
        CellSet nbhd = closed_neighborhood(spec, spec.cell_at(i));
        long long size = nbhd.count();
        CHECK(row.rhs == size);
        REQUIRE(row.terms.size() == (size_t)size + 1);
        // y terms in row-major neighborhood order, then the x term
        int t = 0;
        nbhd.for_each_index([&](int u) { CHECK(row.terms[t++].first == model.var_y(u)); });
        CHECK(row.terms.back().first == model.var_x(i));
        CHECK(row.terms.back().second == size);
    }
}

TEST_CASE("LP text structure and determinism") {
    IpModel model = build_ip(kb(2, 3));
    std::string text = write_lp(model);
    CHECK(text == write_lp(build_ip(kb(2, 3))));
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("obj: theta") != std::string::npos);
    CHECK(text.find("Generals") != std::string::npos);
    CHECK(text.find("Binaries") != std::string::npos);
    CHECK(text.rfind("End\n") == text.size() - 4);
    size_t count = 0;
    for (size_t pos = text.find("nbhd_"); pos != std::string::npos;
         pos = text.find("nbhd_", pos + 1))
        ++count;
    CHECK(count == 6);
    // x before y in the binary listing, row-major
    CHECK(text.find("x_1_1") < text.find("x_2_3"));
    CHECK(text.find("x_2_3") < text.find("y_1_1"));
}

TEST_CASE("write and parse round-trip") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 4}, {5, 5}}) {
        IpModel model = build_ip(kb(m, n));
        IpModel back = parse_lp(write_lp(model));
        CHECK(back.spec.rows == m);
        CHECK(back.spec.cols == n);
        CHECK(back.variables == model.variables);
        REQUIRE(back.constraints.size() == model.constraints.size());
        for (size_t i = 0; i < model.constraints.size(); ++i) {
            CHECK(back.constraints[i].name == model.constraints[i].name);
            CHECK(back.constraints[i].terms == model.constraints[i].terms);
            CHECK(back.constraints[i].sense == model.constraints[i].sense);
            CHECK(back.constraints[i].rhs == model.constraints[i].rhs);
        }
        CHECK(write_lp(back) == write_lp(model));
    }
    CHECK_THROWS_AS(parse_lp("not an lp file"), std::runtime_error);
}

TEST_CASE("valid colorings satisfy every row") {
    std::mt19937 rng(60902);
    for (auto [m, n] : {std::pair{3, 4}, {5, 5}, {6, 6}}) {
        BoardSpec spec = kb(m, n);
        IpModel model = build_ip(spec);
        for (int t = 0; t < 400; ++t) {
            Coloring c = random_coloring(spec, rng);
            REQUIRE(verify(c).valid);
            std::vector<long long> a = assignment_from_coloring(model, c);
            CHECK(a[model.var_theta()] == std::min(c.black_count(), c.white_count()));
            CHECK_FALSE(first_violated(model, a).has_value());
            Coloring back = coloring_from_assignment(model, a);
            CHECK(back.black() == c.black());
            CHECK(back.white() == c.white());
        }
    }
}

TEST_CASE("invalid colorings violate a neighborhood row") {
    BoardSpec spec = kb(3, 4);
    IpModel model = build_ip(spec);
    // adjacent pair colored oppositely: (1,1) attacks (2,3)
    CellSet black = CellSet::of(spec, {Cell{1, 1}});
    CellSet white = CellSet::of(spec, {Cell{2, 3}});
    std::vector<long long> a = assignment_from_coloring(model, Coloring(spec, black, white));
    auto hit = first_violated(model, a);
    REQUIRE(hit.has_value());
    CHECK(hit->rfind("nbhd_", 0) == 0);
}

TEST_CASE("feasible points of the 2x3 model are exactly the valid colorings") {
    BoardSpec spec = kb(2, 3);
    IpModel model = build_ip(spec);
    int feasible = 0;
    for (int xm = 0; xm < 64; ++xm)
        for (int ym = 0; ym < 64; ++ym) {
            std::vector<long long> a(model.variables.size(), 0);
            int b = 0, w = 0;
            for (int i = 0; i < 6; ++i) {
                if (xm & (1 << i)) {
                    a[model.var_x(i)] = 1;
                    ++b;
                }
                if (ym & (1 << i)) {
                    a[model.var_y(i)] = 1;
                    ++w;
                }
            }
            a[model.var_b()] = b;
            a[model.var_w()] = w;
            a[model.var_theta()] = std::min(b, w);
            bool ip_ok = !first_violated(model, a).has_value();
            bool disjoint = (xm & ym) == 0;
            bool coloring_ok = false;
            if (disjoint) {
                CellSet black(spec), white(spec);
                for (int i = 0; i < 6; ++i) {
                    if (xm & (1 << i)) black.add(i);
                    if (ym & (1 << i)) white.add(i);
                }
                coloring_ok = verify(Coloring(spec, black, white)).valid;
            }
            CHECK(ip_ok == (disjoint && coloring_ok));
            if (ip_ok) {
                ++feasible;
                Coloring c = coloring_from_assignment(model, a);
                CHECK(verify(c).valid);
                CHECK(c.black_count() == b);
                CHECK(c.white_count() == w);
            }
        }
    CHECK(feasible > 64);  // all-black and all-white families alone exceed this
}

TEST_CASE("fixed-b variant pins b in the bounds section") {
    IpModel model = build_ip(kb(3, 7), 8);
    REQUIRE(model.fixed_b.has_value());
    CHECK(*model.fixed_b == 8);
    std::string text = write_lp(model);
    CHECK(text.find(" b = 8") != std::string::npos);
    IpModel back = parse_lp(text);
    REQUIRE(back.fixed_b.has_value());
    CHECK(*back.fixed_b == 8);

    // assignment with the wrong b is caught by the bound, right b passes
    Construction c = construct(3, 8);
    IpModel m38 = build_ip(kb(3, 8), 9);
    std::vector<long long> good = assignment_from_coloring(m38, c.coloring);
    CHECK_FALSE(first_violated(m38, good).has_value());
    IpModel wrong = build_ip(kb(3, 8), 4);
    std::vector<long long> bad = assignment_from_coloring(wrong, c.coloring);
    auto hit = first_violated(wrong, bad);
    REQUIRE(hit.has_value());
    CHECK(*hit == "fixed_b_bound");
}

TEST_CASE("theta above the true optimum breaks a min row") {
    BoardSpec spec = kb(2, 3);
    IpModel model = build_ip(spec);
    Coloring c(spec, CellSet::of(spec, {Cell{1, 1}}), CellSet::of(spec, {Cell{2, 1}}));
    std::vector<long long> a = assignment_from_coloring(model, c);
    a[model.var_theta()] += 1;
    auto hit = first_violated(model, a);
    REQUIRE(hit.has_value());
    CHECK((*hit == "minB" || *hit == "minW"));
}
