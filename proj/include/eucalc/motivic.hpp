#ifndef EUCALC_MOTIVIC_HPP
#define EUCALC_MOTIVIC_HPP

/*
  The relative Grothendieck group K0(V/X) in scissor normal form.

  A presentation is a formal integer combination of cellular maps h: V -> X.
  Cutting every V into its cells reduces each generator to a sum of trivial
  cell fibrations, so a class is stored as a finitely supported integer table
  over pairs (target cell c, fiber dimension d): the over-X isomorphism class
  "trivial d-dimensional fibration over the stratum c". Equality in K0
  becomes decidable table equality.

  The ring product is the fiber product over X: classes over different
  strata multiply to zero, fiber dimensions add over the same stratum. The
  one_star homomorphism sends a class to the pushforward of the constant
  function 1 and has a canonical section built from level sets; in
  topological mode one_star has nonzero kernel ((pt,0) + (pt,1) dies), which
  is why the section matters.
*/

#include <map>
#include <utility>
#include <vector>

#include "eucalc/behrend.hpp"
#include "eucalc/cell_space.hpp"
#include "eucalc/constructible.hpp"
#include "eucalc/ints.hpp"

namespace eucalc {

class MotivicClass {
public:
    // key = (cell index in space, fiber dimension >= 0)
    using Table = std::map<std::pair<int, int>, Int>;

    explicit MotivicClass(SpacePtr space) : space_(std::move(space)) {}
    MotivicClass(SpacePtr space, Table table);

    static MotivicClass zero(const SpacePtr& space) { return MotivicClass(space); }
    // class of the identity [X -> X]: one (c, 0) entry per cell
    static MotivicClass unit(const SpacePtr& space);

    const SpacePtr& space() const { return space_; }
    const Table& table() const { return table_; }
    bool is_zero() const { return table_.empty(); }

    void add(int cell, int fiber_dim, const Int& mult);
    Int at(int cell, int fiber_dim) const;

    MotivicClass operator+(const MotivicClass& other) const;
    MotivicClass operator-(const MotivicClass& other) const;
    MotivicClass scaled(const Int& k) const;

    bool operator==(const MotivicClass& other) const {
        return same_space(space_, other.space_) && table_ == other.table_;
    }
    bool operator!=(const MotivicClass& other) const { return !(*this == other); }

private:
    SpacePtr space_;
    Table table_;  // zero entries are never stored
};

// Formal integer combination of maps into a common target.
struct ClassPresentation {
    SpacePtr target;
    std::vector<std::pair<Int, CellMap>> terms;  // (coefficient, h: V -> X)

    void add_term(Int coefficient, CellMap h);
};

// Cut every generator along its cells: [V -> X] contributes +1 at
// (assign(e), Delta(e)) for each cell e of V. Linear in the presentation.
MotivicClass scissor_nf(const ClassPresentation& p);
MotivicClass scissor_nf(const CellMap& h);  // single generator

// entry (c, d) moves to (g(c), d + Delta_g(c))
MotivicClass k0_pushforward(const CellMap& g, const MotivicClass& xi);

// entry (c, d) pulls back to sum over g(c') = c of (c', d)
MotivicClass k0_pullback(const CellMap& g, const MotivicClass& xi);

// fiber product over X: bilinear, (c,d1)*(c,d2) = (c,d1+d2), distinct strata kill
MotivicClass psi_product(const MotivicClass& a, const MotivicClass& b);

// k-fold psi power; k = 0 gives the unit class
MotivicClass psi_power(const MotivicClass& xi, int k);

// 1l_*: (c, d) contributes mult * fiber_weight(d) at cell c
ConstructibleFunction one_star(const MotivicClass& xi);

// [delta]: (c, d) contributes mult * fiber_weight(d) * delta(c); the module
// action of K0(V/X) on F(X)
ConstructibleFunction bracket_delta(const ConstructibleFunction& delta, const MotivicClass& xi);

// canonical section of one_star: level sets of alpha, included with d = 0
MotivicClass section(const ConstructibleFunction& alpha);

// motivic lift of Behrend data via the level-set section
MotivicClass nu_mot(const BehrendData& b);

// Psi_P(xi) = sum_i a_i xi^(i-fold product), the 1-fold being xi itself and
// the 0-fold the unit class
MotivicClass psi_poly(const IntPolynomial& p, const MotivicClass& xi);

// genus of a class: sum of mult * (-y)^(dim c + d); algebraic mode only
IntPolynomial genus_eval(const MotivicClass& xi);

// chi_y-genus of the DT type: genus of the lift of the twisted data
IntPolynomial chi_y_dt(const BehrendData& b);

}  // namespace eucalc

#endif
