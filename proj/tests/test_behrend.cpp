#include <doctest.h>

#include "eucalc/fixtures.hpp"
#include "eucalc/random_gen.hpp"

using namespace eucalc;

TEST_CASE("smooth constructor is the signed constant") {
    auto p2 = fixtures::projective(2);
    auto nu = BehrendData::smooth(p2);
    CHECK(nu.as_cf() == ConstructibleFunction::constant(p2, Int(1)));

    auto nu1 = BehrendData::smooth(fixtures::projective(1));
    CHECK(nu1.as_cf() == ConstructibleFunction::constant(fixtures::projective(1), Int(-1)));
}

TEST_CASE("product data is the cellwise exterior product") {
    auto node_nu = fixtures::node_behrend();
    auto a1_nu = BehrendData::smooth(fixtures::affine_line());
    auto prod_data = BehrendData::product(node_nu, a1_nu);
    CHECK(prod_data.provenance() == Provenance::Product);

    // independent route: walk the product cells through the projections
    auto prod = product_space(node_nu.space(), a1_nu.space());
    REQUIRE(same_space(prod.space, prod_data.space()));
    for (int w = 0; w < prod.space->size(); ++w)
        CHECK(prod_data.at(w) == node_nu.at(prod.to_left.apply(w)) * a1_nu.at(prod.to_right.apply(w)));

    auto e_a1 = prod.space->index_of("e|c1");
    auto x0_a1 = prod.space->index_of("x0|c1");
    CHECK(prod_data.at(e_a1) == 1);
    CHECK(prod_data.at(x0_a1) == 3);
}

TEST_CASE("smooth pullback applies the relative-dimension sign") {
    auto p1 = fixtures::projective(1);
    auto cyl = product_space(p1, fixtures::affine_line());  // projection has fiber dim 1
    REQUIRE(cyl.to_left.smooth());
    auto pulled = BehrendData::smooth_pullback(cyl.to_left, BehrendData::smooth(p1));
    CHECK(pulled.as_cf() == ConstructibleFunction::constant(cyl.space, Int(1)));
    CHECK(pulled.provenance() == Provenance::SmoothPullback);
    // consistency with the product constructor on the same space
    CHECK(BehrendData::product(BehrendData::smooth(p1), BehrendData::smooth(fixtures::affine_line()))
              .as_cf() == pulled.as_cf());

    auto node = fixtures::node();
    auto collapse = CellMap::to_point(node, fixtures::point());
    CHECK_THROWS_AS(BehrendData::smooth_pullback(collapse, BehrendData::smooth(fixtures::point())),
                    Error);
}

TEST_CASE("twisting") {
    auto p2 = fixtures::projective(2);
    CHECK(twist_behrend(BehrendData::smooth(p2)).as_cf() ==
          ConstructibleFunction::constant(p2, Int(1)));

    auto node_nu = fixtures::node_behrend();
    auto twisted = twist_behrend(node_nu);
    CHECK(twisted.at(node_nu.space()->index_of("e")) == 1);
    CHECK(twisted.at(node_nu.space()->index_of("x0")) == 3);
    CHECK(twisted.provenance() == node_nu.provenance());
    CHECK(twist_behrend(twisted).as_cf() == node_nu.as_cf());
}

TEST_CASE("DT invariants of spaces and morphisms") {
    auto p2 = fixtures::projective(2);
    CHECK(dt_invariant(BehrendData::smooth(p2)) == 3);

    // into a point the virtual count is the Euler characteristic
    for (const auto& x : fixtures::all_spaces()) {
        auto pt = fixtures::point(x->mode(), "PT");
        auto collapse = CellMap::to_point(x, pt);
        CHECK(dt_invariant(collapse, BehrendData::smooth(pt)) == euler_cc(x));
    }

    // into the smooth P1 the sign of the target dimension appears,
    // whatever the morphism
    auto node = fixtures::node();
    auto p1 = fixtures::projective(1);
    auto f = CellMap::make_by_ids(node, p1, {{"x0", "a0"}, {"e", "a1"}});
    CHECK(dt_invariant(f, BehrendData::smooth(p1)) == -2);
    auto g = CellMap::make_by_ids(node, p1, {{"x0", "a0"}, {"e", "a0"}});
    CHECK(dt_invariant(g, BehrendData::smooth(p1)) == -2);
}

TEST_CASE("generalized DT invariants agree on both sides") {
    Rng rng(41);
    GenBounds bounds;
    for (int trial = 0; trial < 200; ++trial) {
        Mode mode = trial % 2 ? Mode::Topological : Mode::Algebraic;
        auto y = random_space(rng, bounds, mode, "Y");
        auto f = random_map_onto(rng, y, bounds, "X");
        auto delta = random_cf(rng, y, bounds);
        auto [source_side, target_side] = dt_generalized(f, delta);
        CHECK(source_side == target_side);
    }
}

TEST_CASE("Behrend morphisms") {
    auto dbl = fixtures::double_cover();
    auto nu_dbl = BehrendData::smooth(dbl.source());
    auto nu_circ = BehrendData::smooth(dbl.target());
    CHECK(is_behrend_morphism(dbl, nu_dbl, nu_circ, false));
    CHECK(is_behrend_morphism(dbl, nu_dbl, nu_circ, true));

    auto p1 = fixtures::projective(1);
    auto sq = product_space(p1, fixtures::affine_line());
    auto nu_top = BehrendData::smooth(sq.space);
    auto nu_p1 = BehrendData::smooth(p1);
    CHECK_FALSE(is_behrend_morphism(sq.to_left, nu_top, nu_p1, false));
    CHECK(is_behrend_morphism(sq.to_left, nu_top, nu_p1, true));

    auto node = fixtures::node();
    CHECK(is_behrend_morphism(CellMap::identity(node), fixtures::node_behrend(),
                              fixtures::node_behrend(), false));
}

TEST_CASE("smooth pullbacks are twisted Behrend morphisms") {
    Rng rng(43);
    GenBounds bounds;
    for (int trial = 0; trial < 100; ++trial) {
        auto y = random_space(rng, bounds, trial % 2 ? Mode::Topological : Mode::Algebraic, "Y");
        auto f = random_map_onto(rng, y, bounds, "X", /*force_smooth=*/true);
        auto nu_y = random_user_behrend(rng, y, bounds);
        auto nu_x = BehrendData::smooth_pullback(f, nu_y);
        CHECK(is_behrend_morphism(f, nu_x, nu_y, true));
    }
}

TEST_CASE("DT scissor formula over all closed subsets") {
    for (const auto& x : fixtures::all_spaces()) {
        auto nu = BehrendData::smooth(x);
        Int whole = dt_invariant(CellMap::identity(x), nu);
        for (const auto& closed : enumerate_closed_subsets(x)) {
            auto inner = subspace(closed, ".z");
            auto outer = subspace(closed.complement(), ".u");
            CHECK(whole == dt_invariant(inner.inclusion, nu) + dt_invariant(outer.inclusion, nu));
        }
    }
}

TEST_CASE("Eu transforms") {
    auto node = fixtures::node();
    int x0 = node->index_of("x0"), e = node->index_of("e");

    SUBCASE("identity matrix realizes the tautological correspondence") {
        auto eu = EuMatrix::identity(node);
        auto cf = eu.apply(Cycle::of_cell(node, e));
        CHECK(cf.at(e) == 1);
        CHECK(cf.at(x0) == 0);
    }

    SUBCASE("a weighted entry spreads onto the closure") {
        auto eu = EuMatrix::make(node, {{x0, e, Int(2)}});
        auto cf = eu.apply(Cycle::of_cell(node, e));
        CHECK(cf.at(e) == 1);
        CHECK(cf.at(x0) == 2);
    }

    SUBCASE("indicator matrix sends cl(e) to its characteristic function") {
        auto eu = EuMatrix::indicator_of_closure(node);
        auto cf = eu.apply(Cycle::of_cell(node, e));
        CHECK(cf == ConstructibleFunction::constant(node, Int(1)));
        // the distinguished cycle of the default node data
        auto cyc = cf_to_cycle(fixtures::node_behrend().as_cf());
        CHECK(cyc.at(e) == -1);
        CHECK(cyc.at(x0) == -2);
        CHECK(nu_from_cycle(eu, cyc).as_cf() == fixtures::node_behrend().as_cf());
    }

    SUBCASE("off-order and bad diagonal entries are rejected") {
        CHECK_THROWS_AS(EuMatrix::make(node, {{e, x0, Int(1)}}), Error);
        CHECK_THROWS_AS(EuMatrix::make(node, {{x0, x0, Int(2)}}), Error);
    }

    SUBCASE("apply and invert are mutually inverse on random data") {
        Rng rng(47);
        GenBounds bounds;
        for (int trial = 0; trial < 200; ++trial) {
            auto x = random_space(rng, bounds, Mode::Algebraic, "X");
            auto eu = random_unitriangular(rng, x, bounds);
            std::vector<Int> mult(x->size());
            for (auto& m : mult) m = rng.range(-9, 9);
            Cycle z(x, mult);
            CHECK(eu.invert(eu.apply(z)) == z);
            auto alpha = random_cf(rng, x, bounds);
            CHECK(eu.apply(eu.invert(alpha)) == alpha);
        }
    }
}
