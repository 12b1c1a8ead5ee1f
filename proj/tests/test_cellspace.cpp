#include <doctest.h>

#include <functional>

#include "eucalc/fixtures.hpp"
#include "eucalc/random_gen.hpp"

using namespace eucalc;

namespace {

bool raises(Err code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("space validation accepts the chain and interval fixtures") {
    auto p2 = fixtures::projective(2);
    CHECK(p2->size() == 3);
    CHECK(p2->variety_dim() == 2);
    CHECK(p2->strictly_less(p2->index_of("a0"), p2->index_of("a2")));

    auto seg = fixtures::segment();
    CHECK(seg->mode() == Mode::Topological);
    CHECK(seg->strictly_less(seg->index_of("p"), seg->index_of("i")));
    CHECK_FALSE(seg->strictly_less(seg->index_of("p"), seg->index_of("q")));
}

TEST_CASE("space validation rejects bad documents") {
    CHECK(raises(Err::FrontierViolation, [] {
        CellSpace::make("bad", Mode::Algebraic, {{"a", 1}, {"b", 1}}, {{"a", "b"}});
    }));
    CHECK(raises(Err::DuplicateCellId, [] {
        CellSpace::make("bad", Mode::Algebraic, {{"a", 0}, {"a", 1}}, {});
    }));
    CHECK(raises(Err::CycleInOrder, [] {
        CellSpace::make("bad", Mode::Algebraic, {{"a", 0}}, {{"a", "a"}});
    }));
    CHECK(raises(Err::UnknownCell, [] {
        CellSpace::make("bad", Mode::Algebraic, {{"a", 0}}, {{"a", "zz"}});
    }));
}

TEST_CASE("closure order is transitively completed") {
    auto x = CellSpace::make("chain", Mode::Algebraic, {{"a", 0}, {"b", 1}, {"c", 2}},
                             {{"a", "b"}, {"b", "c"}});
    CHECK(x->strictly_less(0, 2));
}

TEST_CASE("subset kinds") {
    auto p2 = fixtures::projective(2);
    CHECK(CellSubset::of_ids(p2, {"a0"}).kind() == SubsetKind::Closed);
    CHECK(CellSubset::of_ids(p2, {"a2"}).kind() == SubsetKind::Open);
    CHECK(CellSubset::of_ids(p2, {"a1"}).kind() == SubsetKind::LocallyClosed);
    CHECK(CellSubset::of_ids(p2, {"a0", "a2"}).kind() == SubsetKind::General);
    CHECK(CellSubset::of_ids(p2, {"a0"}).complement().kind() == SubsetKind::Open);
}

TEST_CASE("map validation: identity is smooth-eligible, bad maps rejected") {
    auto p2 = fixtures::projective(2);
    auto id = CellMap::identity(p2);
    CHECK(id.smooth());
    CHECK(id.fiber_dim(0) == 0);
    CHECK(id.is_inclusion());

    auto p1 = fixtures::projective(1);
    // a 0-cell onto a 1-cell
    CHECK(raises(Err::NegativeFiberDim, [&] {
        CellMap::make_by_ids(fixtures::point(), p1, {{"pt", "a1"}});
    }));
    CHECK(raises(Err::ModeMismatch, [&] {
        CellMap::make_by_ids(fixtures::real_line(), p1, {{"r", "a1"}});
    }));
    // reversing a chain breaks monotonicity
    auto up = CellSpace::make("up", Mode::Algebraic, {{"u0", 0}, {"u1", 1}}, {{"u0", "u1"}});
    CHECK(raises(Err::NotMonotone, [&] {
        CellMap::make_by_ids(up, p1, {{"u0", "a1"}, {"u1", "a1"}});
    }));
    CHECK(raises(Err::SmoothFlagRejected, [&] {
        // collapse of P1 to a point has fiber dims 0 and 1
        CellMap::make_by_ids(p1, fixtures::point(), {{"a0", "pt"}, {"a1", "pt"}}, true);
    }));
}

TEST_CASE("double cover validates with fiber dimension zero everywhere") {
    auto dbl = fixtures::double_cover();
    for (int e = 0; e < dbl.source()->size(); ++e) CHECK(dbl.fiber_dim(e) == 0);
    CHECK(dbl.smooth());
}

TEST_CASE("composition adds fiber dimensions and is associative") {
    auto dbl = fixtures::double_cover();
    auto pt = fixtures::point(Mode::Topological);
    auto collapse = CellMap::to_point(dbl.target(), pt);
    auto composite = compose_maps(dbl, collapse);
    auto src = dbl.source();
    CHECK(composite.fiber_dim(src->index_of("v1")) == 0);
    CHECK(composite.fiber_dim(src->index_of("e1")) == 1);
    CHECK_FALSE(composite.smooth());

    // identity is a unit
    CHECK(compose_maps(CellMap::identity(src), dbl) == dbl);
    CHECK(compose_maps(dbl, CellMap::identity(dbl.target())) == dbl);

    Rng rng(7);
    GenBounds bounds;
    for (int trial = 0; trial < 25; ++trial) {
        auto z = random_space(rng, bounds, Mode::Algebraic, "Z");
        auto g = random_map_onto(rng, z, bounds, "Y");
        auto f = random_map_onto(rng, g.source(), bounds, "X");
        auto h = CellMap::to_point(z, fixtures::point());
        CHECK(compose_maps(compose_maps(f, g), h) == compose_maps(f, compose_maps(g, h)));
    }
}

TEST_CASE("products multiply cells and Euler characteristics") {
    auto p1 = fixtures::projective(1);
    auto prod = product_space(p1, p1);
    CHECK(prod.space->size() == 4);
    CHECK(euler_cc(prod.space) == 4);
    CHECK_FALSE(prod.to_left.smooth());  // P1 is not pure-dimensional

    // PT x X recovers X up to naming
    auto with_pt = product_space(fixtures::point(), p1);
    CHECK(with_pt.space->size() == p1->size());
    CHECK(euler_cc(with_pt.space) == euler_cc(p1));

    // R1 x R1 is a single open 2-cell
    auto r2 = product_space(fixtures::real_line(), fixtures::real_line());
    CHECK(r2.space->size() == 1);
    CHECK(euler_cc(r2.space) == 1);

    // projection with a pure-dimensional factor is smooth
    auto cyl = product_space(p1, fixtures::affine_line());
    CHECK(cyl.to_left.smooth());
    CHECK(cyl.to_left.fiber_dim(0) == 1);
}

TEST_CASE("euler characteristics of the fixtures") {
    for (int m = 0; m <= 5; ++m) CHECK(euler_cc(fixtures::projective(m)) == m + 1);
    CHECK(euler_cc(fixtures::real_line()) == -1);
    CHECK(euler_cc(fixtures::circle()) == 0);
    CHECK(euler_cc(fixtures::segment()) == 1);
    CHECK(euler_cc(fixtures::node()) == 2);
    CHECK(euler_cc(CellSubset::of_ids(fixtures::projective(2), {})) == 0);
}

TEST_CASE("fiber product against the identity recovers the source") {
    auto dbl = fixtures::double_cover();
    auto sq = fiber_product(dbl, CellMap::identity(dbl.target()));
    REQUIRE(sq.corner->size() == dbl.source()->size());
    for (int w = 0; w < sq.corner->size(); ++w) {
        int e = sq.pairing[w].first;
        CHECK(sq.corner->dim_of(w) == dbl.source()->dim_of(e));
        for (int w2 = 0; w2 < sq.corner->size(); ++w2)
            CHECK(sq.corner->strictly_less(w, w2) ==
                  dbl.source()->strictly_less(sq.pairing[w].first, sq.pairing[w2].first));
    }
}

TEST_CASE("double cover squared over the circle") {
    auto dbl = fixtures::double_cover();
    auto sq = fiber_product(dbl, dbl);
    int vertices = 0, edges = 0;
    for (int w = 0; w < sq.corner->size(); ++w)
        (sq.corner->dim_of(w) == 0 ? vertices : edges) += 1;
    CHECK(vertices == 4);
    CHECK(edges == 4);
    CHECK(euler_cc(sq.corner) == 0);
}

TEST_CASE("fiber of an inclusion is the preimage") {
    auto node = fixtures::node();
    auto x0 = subspace(CellSubset::of_ids(node, {"x0"}), ".x0");
    auto sq = fiber_product(CellMap::identity(node), x0.inclusion);
    CHECK(sq.corner->size() == 1);
    CHECK(sq.corner->dim_of(0) == 0);
}

TEST_CASE("unsupported fiber products are refused, pairings are checked") {
    auto node = fixtures::node();
    auto p1 = fixtures::projective(1);
    auto f = CellMap::make_by_ids(node, p1, {{"x0", "a0"}, {"e", "a1"}});
    CHECK(raises(Err::UnsupportedFragment, [&] { fiber_product(f, f); }));
    CHECK(raises(Err::UnsupportedFragment, [&] {
        fiber_product_with_pairing(f, f, {{0, 0}});
    }));
    // identity pairing for (f, f) is fine
    auto sq = fiber_product_with_pairing(f, f, {{0, 0}, {1, 1}});
    CHECK(sq.corner->size() == 2);
}

TEST_CASE("empty spaces are legal and contribute nothing") {
    auto empty = CellSpace::make("empty", Mode::Algebraic, {}, {});
    CHECK(euler_cc(empty) == 0);
    auto prod = product_space(empty, fixtures::projective(1));
    CHECK(prod.space->empty());
    auto incl = subspace(CellSubset::of_ids(fixtures::projective(1), {}), ".none").inclusion;
    CHECK(incl.source()->empty());
    CHECK(incl.is_inclusion());
}

TEST_CASE("additivity and multiplicativity on random spaces") {
    Rng rng(11);
    GenBounds bounds;
    for (int trial = 0; trial < 200; ++trial) {
        Mode mode = trial % 2 ? Mode::Topological : Mode::Algebraic;
        auto x = random_space(rng, bounds, mode, "X");
        auto closed = random_closed_subset(rng, x);
        CHECK(euler_cc(x) == euler_cc(closed) + euler_cc(closed.complement()));

        auto y = random_space(rng, bounds, mode, "Y");
        CHECK(euler_cc(product_space(x, y).space) == euler_cc(x) * euler_cc(y));
    }
}
