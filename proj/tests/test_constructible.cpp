#include <doctest.h>

#include "eucalc/fixtures.hpp"
#include "eucalc/random_gen.hpp"

using namespace eucalc;

TEST_CASE("function algebra on P2") {
    auto p2 = fixtures::projective(2);
    auto ones = ConstructibleFunction::indicator(CellSubset::whole(p2));
    CHECK(ones.at(0) == 1);
    CHECK((ones + ones) == ones.scaled(Int(2)));

    auto cl_a1 = ConstructibleFunction::indicator(CellSubset::of_ids(p2, {"a0", "a1"}));
    auto cl_a0 = ConstructibleFunction::indicator(CellSubset::of_ids(p2, {"a0"}));
    CHECK((cl_a1 * cl_a0) == cl_a0);
}

TEST_CASE("pullbacks evaluate along the assignment") {
    auto dbl = fixtures::double_cover();
    auto circ = dbl.target();
    auto ones = ConstructibleFunction::constant(circ, Int(1));
    CHECK(pullback_cf(dbl, ones) == ConstructibleFunction::constant(dbl.source(), Int(1)));

    auto at_v = ConstructibleFunction::indicator(CellSubset::of_ids(circ, {"v"}));
    auto pulled = pullback_cf(dbl, at_v);
    CHECK(pulled.at(dbl.source()->index_of("v1")) == 1);
    CHECK(pulled.at(dbl.source()->index_of("v2")) == 1);
    CHECK(pulled.at(dbl.source()->index_of("e1")) == 0);

    // restriction of the twisted node data to the singular point
    auto node = fixtures::node();
    auto x0 = subspace(CellSubset::of_ids(node, {"x0"}), ".x0");
    auto twisted = twist_behrend(fixtures::node_behrend()).as_cf();
    CHECK(restrict_cf(twisted, x0).at(0) == 3);
}

TEST_CASE("pushforward weights fibers by their dimension") {
    auto dbl = fixtures::double_cover();
    auto ones = ConstructibleFunction::constant(dbl.source(), Int(1));
    CHECK(pushforward_cf(dbl, ones) == ConstructibleFunction::constant(dbl.target(), Int(2)));

    auto id = CellMap::identity(dbl.source());
    CHECK(pushforward_cf(id, ones) == ones);

    auto r1 = fixtures::real_line();
    auto pt = fixtures::point(Mode::Topological, "PTT");
    auto collapse = CellMap::to_point(r1, pt);
    auto pushed = pushforward_cf(collapse, ConstructibleFunction::constant(r1, Int(1)));
    CHECK(pushed.at(0) == -1);
}

TEST_CASE("euler integrals of the named examples") {
    auto p2 = fixtures::projective(2);
    CHECK(euler_integral(ConstructibleFunction::constant(p2, Int(1))) == 3);
    CHECK(euler_integral(fixtures::node_behrend().as_cf()) == -4);
    CHECK(euler_integral(ConstructibleFunction::zero(p2)) == 0);
}

TEST_CASE("level-set oracle agrees with the direct integral") {
    auto p2 = fixtures::projective(2);
    auto two_on_cl_a1 =
        ConstructibleFunction::indicator(CellSubset::of_ids(p2, {"a0", "a1"})).scaled(Int(2));
    CHECK(weighted_euler_oracle(two_on_cl_a1) == 4);
    CHECK(weighted_euler_oracle(ConstructibleFunction::constant(p2, Int(1))) == 3);

    Rng rng(23);
    GenBounds bounds;
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_space(rng, bounds, trial % 2 ? Mode::Topological : Mode::Algebraic, "X");
        auto alpha = random_cf(rng, x, bounds);
        CHECK(euler_integral(alpha) == weighted_euler_oracle(alpha));
    }
}

TEST_CASE("genus integral") {
    auto a1 = fixtures::affine_line();
    auto genus = genus_integral(ConstructibleFunction::constant(a1, Int(1)));
    CHECK(genus == IntPolynomial({Int(0), Int(-1)}));  // -y

    auto p2 = fixtures::projective(2);
    CHECK(genus_integral(ConstructibleFunction::constant(p2, Int(1))) ==
          IntPolynomial({Int(1), Int(-1), Int(1)}));  // 1 - y + y^2

    CHECK_THROWS_AS(genus_integral(ConstructibleFunction::constant(fixtures::real_line(), Int(1))),
                    Error);

    Rng rng(5);
    GenBounds bounds;
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_space(rng, bounds, Mode::Algebraic, "X");
        auto alpha = random_cf(rng, x, bounds);
        CHECK(genus_integral(alpha).evaluate(Int(-1)) == euler_integral(alpha));
    }
}

TEST_CASE("functoriality, projection formula, integral invariance") {
    Rng rng(31);
    GenBounds bounds;
    for (int trial = 0; trial < 300; ++trial) {
        Mode mode = trial % 2 ? Mode::Topological : Mode::Algebraic;
        auto z = random_space(rng, bounds, mode, "Z");
        auto g = random_map_onto(rng, z, bounds, "Y");
        auto f = random_map_onto(rng, g.source(), bounds, "X");
        auto gf = compose_maps(f, g);

        auto alpha = random_cf(rng, f.source(), bounds);
        auto beta = random_cf(rng, g.source(), bounds);
        auto gamma = random_cf(rng, z, bounds);

        CHECK(pushforward_cf(gf, alpha) == pushforward_cf(g, pushforward_cf(f, alpha)));
        CHECK(pullback_cf(gf, gamma) == pullback_cf(f, pullback_cf(g, gamma)));
        CHECK(pushforward_cf(f, alpha * pullback_cf(f, beta)) == pushforward_cf(f, alpha) * beta);
        CHECK(euler_integral(alpha) == euler_integral(pushforward_cf(f, alpha)));
    }
}

TEST_CASE("scissor additivity of the integral") {
    Rng rng(37);
    GenBounds bounds;
    for (int trial = 0; trial < 200; ++trial) {
        Mode mode = trial % 2 ? Mode::Topological : Mode::Algebraic;
        auto x = random_space(rng, bounds, mode, "X");
        auto alpha = random_cf(rng, x, bounds);
        auto closed = random_closed_subset(rng, x);
        auto inner = subspace(closed, ".z");
        auto outer = subspace(closed.complement(), ".u");
        CHECK(euler_integral(alpha) ==
              euler_integral(restrict_cf(alpha, inner)) + euler_integral(restrict_cf(alpha, outer)));
    }
}

TEST_CASE("pointwise polynomial transforms") {
    auto p2 = fixtures::projective(2);
    auto beta = ConstructibleFunction::indicator(CellSubset::of_ids(p2, {"a0", "a1"})).scaled(Int(2));
    // P(t) = t is the identity
    CHECK(cf_poly(IntPolynomial({Int(0), Int(1)}), beta) == beta);
    // P(t) = t^2 squares pointwise
    CHECK(cf_poly(IntPolynomial({Int(0), Int(0), Int(1)}), beta) == beta * beta);
    // the constant term contributes a constant function
    CHECK(cf_poly(IntPolynomial({Int(5)}), beta) == ConstructibleFunction::constant(p2, Int(5)));
}
