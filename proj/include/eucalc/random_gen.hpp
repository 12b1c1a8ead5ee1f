#ifndef EUCALC_RANDOM_GEN_HPP
#define EUCALC_RANDOM_GEN_HPP

/*
  Seeded generators for randomized law checking. Spaces come out of a fibered
  construction: the source of a random map is built cell-by-cell over the
  target, so every generated map is automatically monotone with non-negative
  fiber dimensions, and smooth maps can be forced by using one fiber
  dimension everywhere.
*/

#include <string>
#include <vector>

#include "eucalc/behrend.hpp"
#include "eucalc/cell_space.hpp"
#include "eucalc/constructible.hpp"
#include "eucalc/motivic.hpp"
#include "eucalc/rng.hpp"

namespace eucalc {

struct GenBounds {
    int max_cells = 5;        // base space size
    int max_dim = 3;          // base space top dimension
    int max_fiber_cells = 2;  // cells over each target cell in random maps
    int max_fiber_dim = 2;
    int value_bound = 9;      // constructible values drawn from [-bound, bound]
};

SpacePtr random_space(Rng& rng, const GenBounds& bounds, Mode mode, const std::string& name);

// random map onto `target` built by the fibered construction (surjective);
// force_smooth makes every fiber dimension equal
CellMap random_map_onto(Rng& rng, const SpacePtr& target, const GenBounds& bounds,
                        const std::string& source_name, bool force_smooth = false);

CellSubset random_closed_subset(Rng& rng, const SpacePtr& space);
CellSubset random_subset(Rng& rng, const SpacePtr& space);

ConstructibleFunction random_cf(Rng& rng, const SpacePtr& space, const GenBounds& bounds);

MotivicClass random_motivic(Rng& rng, const SpacePtr& space, const GenBounds& bounds);

BehrendData random_user_behrend(Rng& rng, const SpacePtr& space, const GenBounds& bounds);

// random unitriangular matrix in the closure order (diagonal 1)
EuMatrix random_unitriangular(Rng& rng, const SpacePtr& space, const GenBounds& bounds);

IntPolynomial random_poly(Rng& rng, int max_degree, int coeff_bound);

}  // namespace eucalc

#endif
