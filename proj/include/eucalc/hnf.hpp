#ifndef EUCALC_HNF_HPP
#define EUCALC_HNF_HPP

/*
  Exact integer row lattices. hermite_form reduces a generator matrix to row
  Hermite normal form while tracking the unimodular transform, so membership
  queries can hand back coefficients in terms of the original generators.
  Everything is arbitrary-precision; intermediate entries are allowed to grow.
*/

#include <optional>
#include <vector>

#include "eucalc/ints.hpp"

namespace eucalc {

using IntMatrix = std::vector<std::vector<Int>>;

struct HermiteForm {
    IntMatrix basis;      // r nonzero echelon rows, positive pivots
    IntMatrix transform;  // r rows of the unimodular U with U * generators = basis
    std::vector<int> pivot_cols;
};

// Row-style HNF of the lattice spanned by the rows of `generators`.
HermiteForm hermite_form(const IntMatrix& generators);

struct LatticeSolution {
    std::vector<Int> coefficients;  // over the original generators
};

struct LatticeObstruction {
    int column = -1;   // coordinate where solving failed
    Int remainder;     // residual value at that coordinate
    Int modulus;       // pivot that must divide it (0: no pivot at all)
};

struct MembershipResult {
    bool member = false;
    std::optional<LatticeSolution> solution;
    std::optional<LatticeObstruction> obstruction;
};

// Does `target` lie in the integer row span of `generators`? On success the
// coefficients recombine the original generators to target exactly.
MembershipResult lattice_membership(const HermiteForm& hnf, int n_generators,
                                    const std::vector<Int>& target);

}  // namespace eucalc

#endif
