#include "eucalc/random_gen.hpp"

namespace eucalc {

SpacePtr random_space(Rng& rng, const GenBounds& bounds, Mode mode, const std::string& name) {
    const int n = rng.range(1, bounds.max_cells);
    std::vector<Cell> cells;
    cells.reserve(n);
    for (int i = 0; i < n; ++i)
        cells.push_back({name + "c" + std::to_string(i), rng.range(0, bounds.max_dim)});
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cells[i].dim < cells[j].dim && rng.chance(1, 2)) lt[i][j] = true;
    // close transitively; dims strictly increase along edges, so no cycles
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (lt[i][k])
                for (int j = 0; j < n; ++j)
                    if (lt[k][j]) lt[i][j] = true;
    return CellSpace::from_relation(name, mode, std::move(cells), std::move(lt));
}

CellMap random_map_onto(Rng& rng, const SpacePtr& target, const GenBounds& bounds,
                        const std::string& source_name, bool force_smooth) {
    const int smooth_delta = rng.range(0, bounds.max_fiber_dim);
    std::vector<Cell> cells;
    std::vector<int> assign;
    for (int t = 0; t < target->size(); ++t) {
        const int k = rng.range(1, bounds.max_fiber_cells);
        for (int i = 0; i < k; ++i) {
            int delta = force_smooth ? smooth_delta : rng.range(0, bounds.max_fiber_dim);
            cells.push_back({source_name + "_" + target->cell(t).id + "_" + std::to_string(i),
                             target->dim_of(t) + delta});
            assign.push_back(t);
        }
    }
    const int n = static_cast<int>(cells.size());
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (cells[a].dim >= cells[b].dim) continue;
            if (!target->leq(assign[a], assign[b])) continue;  // keep the assignment monotone
            if (rng.chance(1, 2)) lt[a][b] = true;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (lt[i][k])
                for (int j = 0; j < n; ++j)
                    if (lt[k][j]) lt[i][j] = true;
    auto source = CellSpace::from_relation(source_name, target->mode(), std::move(cells), std::move(lt));
    return CellMap::make(source, target, std::move(assign), force_smooth);
}

CellSubset random_closed_subset(Rng& rng, const SpacePtr& space) {
    std::vector<int> members;
    for (int i = 0; i < space->size(); ++i)
        if (rng.chance(1, 2)) members.push_back(i);
    // down-close
    std::vector<bool> in(space->size(), false);
    for (int m : members) in[m] = true;
    for (int m = 0; m < space->size(); ++m)
        if (in[m])
            for (int j = 0; j < space->size(); ++j)
                if (space->strictly_less(j, m)) in[j] = true;
    members.clear();
    for (int i = 0; i < space->size(); ++i)
        if (in[i]) members.push_back(i);
    return CellSubset(space, std::move(members));
}

CellSubset random_subset(Rng& rng, const SpacePtr& space) {
    std::vector<int> members;
    for (int i = 0; i < space->size(); ++i)
        if (rng.chance(1, 2)) members.push_back(i);
    return CellSubset(space, std::move(members));
}

ConstructibleFunction random_cf(Rng& rng, const SpacePtr& space, const GenBounds& bounds) {
    std::vector<Int> values(space->size());
    for (auto& v : values) v = rng.range(-bounds.value_bound, bounds.value_bound);
    return ConstructibleFunction(space, std::move(values));
}

MotivicClass random_motivic(Rng& rng, const SpacePtr& space, const GenBounds& bounds) {
    MotivicClass out(space);
    const int entries = rng.range(0, 2 * std::max(1, space->size()));
    for (int i = 0; i < entries && space->size() > 0; ++i)
        out.add(rng.range(0, space->size() - 1), rng.range(0, bounds.max_fiber_dim),
                Int(rng.range(-bounds.value_bound, bounds.value_bound)));
    return out;
}

BehrendData random_user_behrend(Rng& rng, const SpacePtr& space, const GenBounds& bounds) {
    std::vector<Int> values(space->size());
    for (auto& v : values) v = rng.range(-bounds.value_bound, bounds.value_bound);
    return BehrendData::user(space, std::move(values));
}

EuMatrix random_unitriangular(Rng& rng, const SpacePtr& space, const GenBounds& bounds) {
    std::vector<std::tuple<int, int, Int>> entries;
    for (int sub = 0; sub < space->size(); ++sub)
        for (int super = 0; super < space->size(); ++super)
            if (space->strictly_less(sub, super) && rng.chance(2, 3))
                entries.emplace_back(sub, super, Int(rng.range(-bounds.value_bound, bounds.value_bound)));
    return EuMatrix::make(space, entries);
}

IntPolynomial random_poly(Rng& rng, int max_degree, int coeff_bound) {
    IntPolynomial p;
    const int degree = rng.range(0, max_degree);
    for (int i = 0; i <= degree; ++i) p.add_term(i, Int(rng.range(-coeff_bound, coeff_bound)));
    return p;
}

}  // namespace eucalc
