#include "eucalc/harness.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace eucalc {

const std::vector<std::string> kAxiomKinds = {
    "B1", "B2", "B3", "B4", "B5", "B6", "B7", "BehProduct", "BehPushforward", "BehPullback"};

namespace {

Mode random_mode(Rng& rng) { return rng.chance(1, 2) ? Mode::Topological : Mode::Algebraic; }

// smooth surjection or inclusion of a subset, the base-change fragment
CellMap random_base_leg(Rng& rng, const SpacePtr& target, const GenBounds& bounds,
                        const std::string& name) {
    if (rng.chance(1, 2)) return random_map_onto(rng, target, bounds, name, /*force_smooth=*/true);
    return subspace(random_subset(rng, target), "." + name).inclusion;
}

BehrendData random_behrend(Rng& rng, const SpacePtr& space, const GenBounds& bounds) {
    if (rng.chance(1, 4)) return BehrendData::smooth(space);
    return random_user_behrend(rng, space, bounds);
}

// random integer combination of the lattice generators
ConstructibleFunction random_member(Rng& rng, const GeneratorLattice& lattice) {
    auto out = ConstructibleFunction::zero(lattice.morphism().source());
    for (const auto& gen : lattice.generators()) out = out + gen.scaled(Int(rng.range(-3, 3)));
    return out;
}

bool elements_match(const BivariantElement& a, const BivariantElement& b) {
    return a.morphism == b.morphism && a.value == b.value;
}

// order- and dimension-preserving identification by index
bool spaces_index_isomorphic(const SpacePtr& a, const SpacePtr& b) {
    if (a->size() != b->size()) return false;
    for (int i = 0; i < a->size(); ++i) {
        if (a->dim_of(i) != b->dim_of(i)) return false;
        for (int j = 0; j < a->size(); ++j)
            if (a->strictly_less(i, j) != b->strictly_less(i, j)) return false;
    }
    return true;
}

// Corner of (f o h_total, g) realized in the cell order of the iterated
// corner `inner`, whose pairing composes out to (cell of X, cell of g's
// source). Validates that the iterated and the direct corner agree.
FiberSquare realign_square(const CellMap& primary, const CellMap& base,
                           const std::vector<std::pair<int, int>>& derived_pairing) {
    return fiber_product_with_pairing(primary, base, derived_pairing);
}

CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }
CheckOutcome pass() { return {true, ""}; }

CheckOutcome eval_b1(const AxiomInstance& in) {
    const auto& f = in.maps[0];
    const auto& g = in.maps[1];
    const auto& h = in.maps[2];
    BivariantElement a(f, in.functions[0]), b(g, in.functions[1]), c(h, in.functions[2]);
    auto lhs = biv_product(biv_product(a, b), c);
    auto rhs = biv_product(a, biv_product(b, c));
    if (!elements_match(lhs, rhs)) return fail("(a.b).c differs from a.(b.c)");
    return pass();
}

CheckOutcome eval_b2(const AxiomInstance& in) {
    const auto& f = in.maps[0];
    const auto& g = in.maps[1];
    const auto& h = in.maps[2];
    BivariantElement a(compose_maps(compose_maps(f, g), h), in.functions[0]);
    auto joint = biv_pushforward(compose_maps(f, g), h, a);
    auto staged = biv_pushforward(g, h, biv_pushforward(f, compose_maps(g, h), a));
    if (!elements_match(joint, staged)) return fail("(g o f)_* differs from g_* o f_*");
    return pass();
}

CheckOutcome eval_b3(const AxiomInstance& in) {
    const auto& f = in.maps[0];
    const auto& g = in.maps[1];
    const auto& h = in.maps[2];
    const auto& alpha = in.functions[0];

    auto sq1 = fiber_product(f, g);
    auto sq2 = fiber_product(sq1.to_right, h);
    std::vector<std::pair<int, int>> derived;
    derived.reserve(sq2.pairing.size());
    for (const auto& [x1, ypp] : sq2.pairing) derived.emplace_back(sq1.pairing[x1].first, ypp);
    auto sq3 = realign_square(f, compose_maps(h, g), derived);

    if (!spaces_index_isomorphic(sq2.corner, sq3.corner))
        return fail("iterated corner is not the corner of the composed square");
    auto staged = pullback_cf(sq2.to_left, pullback_cf(sq1.to_left, alpha));
    auto joint = pullback_cf(sq3.to_left, alpha);
    if (staged.values() != joint.values()) return fail("h* o g* differs from (g o h)*");
    return pass();
}

CheckOutcome eval_b4(const AxiomInstance& in) {
    const auto& f = in.maps[0];
    const auto& g = in.maps[1];
    const auto& h = in.maps[2];
    BivariantElement a(compose_maps(f, g), in.functions[0]);
    BivariantElement b(h, in.functions[1]);
    auto lhs = biv_pushforward(f, compose_maps(g, h), biv_product(a, b));
    auto rhs = biv_product(biv_pushforward(f, g, a), b);
    if (!elements_match(lhs, rhs)) return fail("f_*(a.b) differs from (f_* a).b");
    return pass();
}

// corners used by the B5/B6 shape: chain X -f-> Y -h-> Z with base g: Z' -> Z
struct TowerSquares {
    FiberSquare over_y;  // (h, g), corner Y'
    FiberSquare over_x;  // (h o f, g), corner X', aligned with fiber(f, g_Y)
    CellMap f_corner;    // X' -> Y'
};

TowerSquares pull_tower(const CellMap& f, const CellMap& h, const CellMap& g) {
    auto over_y = fiber_product(h, g);
    auto inner = fiber_product(f, over_y.to_left);
    std::vector<std::pair<int, int>> derived;
    derived.reserve(inner.pairing.size());
    for (const auto& [x, yp] : inner.pairing)
        derived.emplace_back(x, over_y.pairing[yp].second);
    auto over_x = realign_square(compose_maps(f, h), g, derived);
    if (!spaces_index_isomorphic(inner.corner, over_x.corner))
        throw Error(Err::FrontierViolation, "tower corners disagree");
    std::vector<int> to_yp(inner.corner->size());
    for (int w = 0; w < inner.corner->size(); ++w) to_yp[w] = inner.pairing[w].second;
    auto f_corner = CellMap::make(over_x.corner, over_y.corner, std::move(to_yp));
    return TowerSquares{std::move(over_y), std::move(over_x), std::move(f_corner)};
}

CheckOutcome eval_b5(const AxiomInstance& in) {
    const auto& h = in.maps[0];
    const auto& f = in.maps[1];
    const auto& g = in.maps[2];
    const auto& alpha = in.functions[0];
    const auto& beta = in.functions[1];
    auto t = pull_tower(f, h, g);

    auto lhs = biv_pullback(t.over_x, biv_product(BivariantElement(f, alpha), BivariantElement(h, beta)));

    FiberSquare aligned{f, t.over_y.to_left, t.over_x.corner, t.over_x.to_left, t.f_corner, {}};
    auto alpha_pulled = biv_pullback(aligned, BivariantElement(f, alpha));
    auto beta_pulled = biv_pullback(t.over_y, BivariantElement(h, beta));
    auto rhs = biv_product(alpha_pulled, beta_pulled);
    if (!elements_match(lhs, rhs)) return fail("g*(a.b) differs from g*(a).g*(b)");
    return pass();
}

CheckOutcome eval_b6(const AxiomInstance& in) {
    const auto& h = in.maps[0];
    const auto& f = in.maps[1];
    const auto& g = in.maps[2];
    const auto& alpha = in.functions[0];
    auto t = pull_tower(f, h, g);

    BivariantElement a(compose_maps(f, h), alpha);
    auto route1 = biv_pullback(t.over_y, biv_pushforward(f, h, a));
    auto route2 = biv_pushforward(t.f_corner, t.over_y.to_right, biv_pullback(t.over_x, a));
    if (!elements_match(route1, route2)) return fail("g* o f_* differs from f'_* o g*");
    return pass();
}

CheckOutcome eval_b7(const AxiomInstance& in) {
    const auto& h = in.maps[0];
    const auto& f = in.maps[1];
    const auto& g = in.maps[2];
    const auto& alpha = in.functions[0];
    const auto& beta = in.functions[1];

    auto sq = fiber_product(f, g);
    BivariantElement a(f, alpha);
    BivariantElement b(compose_maps(g, h), beta);
    auto pulled = biv_pullback(sq, a);
    auto lhs = biv_pushforward(sq.to_left, compose_maps(f, h), biv_product(pulled, b));
    auto rhs = biv_product(a, biv_pushforward(g, h, b));
    if (!elements_match(lhs, rhs)) return fail("g'_*(g*(a).b) differs from a.g_*(b)");
    return pass();
}

CheckOutcome check_membership(const GeneratorLattice& lattice, const ConstructibleFunction& value,
                              const std::string& what) {
    auto cert = membership(lattice, value);
    if (!cert.member) return fail(what + ": not a lattice member");
    if (!(recombine(lattice, *cert.coefficients) == value))
        return fail(what + ": certificate does not recombine to the value");
    return pass();
}

CheckOutcome eval_beh_product(const AxiomInstance& in) {
    const auto& g = in.maps[0];
    const auto& f = in.maps[1];
    const auto& a_val = in.functions[0];
    const auto& b_val = in.functions[1];
    const auto& b_z = in.behrend[1];
    auto prod = biv_product(BivariantElement(f, a_val), BivariantElement(g, b_val));
    GeneratorLattice target(compose_maps(f, g), b_z);
    return check_membership(target, prod.value, "product closure");
}

CheckOutcome eval_beh_pushforward(const AxiomInstance& in) {
    const auto& g = in.maps[0];
    const auto& f = in.maps[1];
    const auto& a_val = in.functions[0];
    const auto& b_z = in.behrend[0];
    auto pushed = biv_pushforward(f, g, BivariantElement(compose_maps(f, g), a_val));
    GeneratorLattice target(g, b_z);
    return check_membership(target, pushed.value, "pushforward closure");
}

CheckOutcome eval_beh_pullback(const AxiomInstance& in) {
    const auto& f = in.maps[0];
    const auto& g = in.maps[1];
    const auto& a_val = in.functions[0];
    const auto& b_y = in.behrend[0];
    auto sq = fiber_product(f, g);
    auto pulled = biv_pullback(sq, BivariantElement(f, a_val), /*behrend_tracking=*/true);
    GeneratorLattice target(sq.to_right, BehrendData::smooth_pullback(g, b_y));
    return check_membership(target, pulled.value, "pullback closure");
}

}  // namespace

AxiomInstance generate_instance(const std::string& axiom, std::uint64_t seed, const GenBounds& bounds) {
    Rng rng(seed);
    AxiomInstance in;
    in.axiom = axiom;
    in.seed = seed;
    Mode mode = random_mode(rng);

    if (axiom == "B1" || axiom == "B2" || axiom == "B4") {
        auto w = random_space(rng, bounds, mode, "W");
        auto h = random_map_onto(rng, w, bounds, "Z");
        auto g = random_map_onto(rng, h.source(), bounds, "Y");
        auto f = random_map_onto(rng, g.source(), bounds, "X");
        in.spaces = {f.source(), g.source(), h.source(), w};
        in.maps = {f, g, h};
        if (axiom == "B1")
            in.functions = {random_cf(rng, f.source(), bounds), random_cf(rng, g.source(), bounds),
                            random_cf(rng, h.source(), bounds)};
        else if (axiom == "B2")
            in.functions = {random_cf(rng, f.source(), bounds)};
        else
            in.functions = {random_cf(rng, f.source(), bounds), random_cf(rng, h.source(), bounds)};
        return in;
    }
    if (axiom == "B3") {
        auto y = random_space(rng, bounds, mode, "Y");
        auto f = random_map_onto(rng, y, bounds, "X");
        auto g = random_base_leg(rng, y, bounds, "Yp");
        auto h = random_base_leg(rng, g.source(), bounds, "Ypp");
        in.spaces = {f.source(), y, g.source(), h.source()};
        in.maps = {f, g, h};
        in.functions = {random_cf(rng, f.source(), bounds)};
        return in;
    }
    if (axiom == "B5" || axiom == "B6") {
        auto z = random_space(rng, bounds, mode, "Z");
        auto h = random_map_onto(rng, z, bounds, "Y");
        auto f = random_map_onto(rng, h.source(), bounds, "X");
        auto g = random_base_leg(rng, z, bounds, "Zp");
        in.spaces = {f.source(), h.source(), z, g.source()};
        in.maps = {h, f, g};
        if (axiom == "B5")
            in.functions = {random_cf(rng, f.source(), bounds), random_cf(rng, h.source(), bounds)};
        else
            in.functions = {random_cf(rng, f.source(), bounds)};
        return in;
    }
    if (axiom == "B7") {
        auto z = random_space(rng, bounds, mode, "Z");
        auto h = random_map_onto(rng, z, bounds, "Y");
        auto f = random_map_onto(rng, h.source(), bounds, "X");
        auto g = random_base_leg(rng, h.source(), bounds, "Yp");
        in.spaces = {f.source(), h.source(), z, g.source()};
        in.maps = {h, f, g};
        in.functions = {random_cf(rng, f.source(), bounds), random_cf(rng, g.source(), bounds)};
        return in;
    }
    if (axiom == "BehProduct" || axiom == "BehPushforward") {
        auto z = random_space(rng, bounds, mode, "Z");
        auto g = random_map_onto(rng, z, bounds, "Y");
        auto f = random_map_onto(rng, g.source(), bounds, "X");
        in.spaces = {f.source(), g.source(), z};
        in.maps = {g, f};
        if (axiom == "BehProduct") {
            auto b_y = random_behrend(rng, g.source(), bounds);
            auto b_z = random_behrend(rng, z, bounds);
            in.behrend = {b_y, b_z};
            in.functions = {random_member(rng, GeneratorLattice(f, b_y)),
                            random_member(rng, GeneratorLattice(g, b_z))};
        } else {
            auto b_z = random_behrend(rng, z, bounds);
            in.behrend = {b_z};
            in.functions = {random_member(rng, GeneratorLattice(compose_maps(f, g), b_z))};
        }
        return in;
    }
    if (axiom == "BehPullback") {
        auto y = random_space(rng, bounds, mode, "Y");
        auto f = random_map_onto(rng, y, bounds, "X");
        auto g = random_map_onto(rng, y, bounds, "Yp", /*force_smooth=*/true);
        auto b_y = random_behrend(rng, y, bounds);
        in.spaces = {f.source(), y, g.source()};
        in.maps = {f, g};
        in.behrend = {b_y};
        in.functions = {random_member(rng, GeneratorLattice(f, b_y))};
        return in;
    }
    throw Error(Err::UsageError, "unknown axiom kind '" + axiom + "'");
}

CheckOutcome evaluate_instance(const AxiomInstance& in) {
    try {
        if (in.axiom == "B1") return eval_b1(in);
        if (in.axiom == "B2") return eval_b2(in);
        if (in.axiom == "B3") return eval_b3(in);
        if (in.axiom == "B4") return eval_b4(in);
        if (in.axiom == "B5") return eval_b5(in);
        if (in.axiom == "B6") return eval_b6(in);
        if (in.axiom == "B7") return eval_b7(in);
        if (in.axiom == "BehProduct") return eval_beh_product(in);
        if (in.axiom == "BehPushforward") return eval_beh_pushforward(in);
        if (in.axiom == "BehPullback") return eval_beh_pullback(in);
    } catch (const Error& e) {
        return fail(std::string("evaluator raised ") + e.what());
    }
    return fail("unknown axiom kind '" + in.axiom + "'");
}

int HarnessReport::total_run() const {
    int n = 0;
    for (const auto& t : tallies) n += t.run;
    return n;
}

int HarnessReport::total_passed() const {
    int n = 0;
    for (const auto& t : tallies) n += t.passed;
    return n;
}

HarnessReport check_axioms(std::uint64_t seed, int count, const GenBounds& bounds, int workers) {
    HarnessReport report;
    report.seed = seed;
    report.count = count;
    for (const auto& kind : kAxiomKinds) report.tallies.push_back({kind, 0, 0});

    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
        workers = std::min(workers, 8);
    }
    workers = std::max(1, std::min(workers, std::max(1, count)));

    std::vector<char> passed(count, 0);
    std::vector<AxiomInstance> failures;
    std::mutex failures_mutex;

    auto run_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const std::string& kind = kAxiomKinds[i % kAxiomKinds.size()];
            auto instance = generate_instance(kind, mix_seed(seed, i), bounds);
            auto outcome = evaluate_instance(instance);
            passed[i] = outcome.pass ? 1 : 0;
            if (!outcome.pass) {
                std::lock_guard<std::mutex> lock(failures_mutex);
                failures.push_back(std::move(instance));
            }
        }
    };

    if (workers == 1) {
        run_range(0, count);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int begin = w * chunk;
            int end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    for (int i = 0; i < count; ++i) {
        auto& tally = report.tallies[i % kAxiomKinds.size()];
        ++tally.run;
        if (passed[i]) ++tally.passed;
    }
    std::sort(failures.begin(), failures.end(),
              [](const AxiomInstance& a, const AxiomInstance& b) { return a.seed < b.seed; });
    report.failures = std::move(failures);
    return report;
}

}  // namespace eucalc
