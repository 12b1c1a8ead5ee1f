#ifndef EUCALC_BEHREND_HPP
#define EUCALC_BEHREND_HPP

/*
  Behrend-type data and the invariants built from it.

  nu_X is data, not a derivation: it enters as one of the four admissible
  constructors (smooth constant, exterior product, smooth pullback, explicit
  user values). The twisted form multiplies by (-1)^(dim X) and equals the
  constant 1 exactly on smooth data.

  The DT-type invariant of a space is chi(X, nu_X); of a morphism f: X -> Y
  it is chi(X, f^* nu_Y), the virtual count of f. The generalized form takes
  any constructible delta_Y and reports both the source-side and target-side
  values, which must agree.

  Eu matrices are unitriangular integer matrices along the closure order;
  they mediate between cycles (formal sums of cell closures) and
  constructible functions, with the indicator-of-closure matrix playing the
  role of the tautological isomorphism.
*/

#include <utility>
#include <vector>

#include "eucalc/cell_space.hpp"
#include "eucalc/constructible.hpp"
#include "eucalc/ints.hpp"

namespace eucalc {

enum class Provenance { Smooth, Product, SmoothPullback, User };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

class BehrendData {
public:
    static BehrendData smooth(SpacePtr space);
    // exterior product, living on product_space(a.space, b.space)
    static BehrendData product(const BehrendData& a, const BehrendData& b);
    // (-1)^n f^* nu_Y for f smooth of relative dimension n; SmoothFlagRequired otherwise
    static BehrendData smooth_pullback(const CellMap& f, const BehrendData& nu_y);
    static BehrendData user(SpacePtr space, std::vector<Int> values);
    // rehydrate stored data keeping its provenance tag; enforces the smooth
    // invariant (constant (-1)^dim) when the tag claims smooth
    static BehrendData from_document(SpacePtr space, std::vector<Int> values, Provenance provenance);

    const SpacePtr& space() const { return space_; }
    const std::vector<Int>& values() const { return values_; }
    const Int& at(int cell) const { return values_[cell]; }
    Provenance provenance() const { return provenance_; }

    ConstructibleFunction as_cf() const { return ConstructibleFunction(space_, values_); }

    // values multiplied by (-1)^(dim X), provenance tag kept
    BehrendData twisted() const;

private:
    BehrendData(SpacePtr space, std::vector<Int> values, Provenance provenance);

    SpacePtr space_;
    std::vector<Int> values_;
    Provenance provenance_;
};

// multiply by (-1)^(dim X); involution, provenance preserved
BehrendData twist_behrend(const BehrendData& b);

// chi^DT(X) = chi(X, nu_X)
Int dt_invariant(const BehrendData& nu);
// chi^DT(X -> Y) = chi(X, f^* nu_Y), the virtual count of the morphism
Int dt_invariant(const CellMap& f, const BehrendData& nu_y);
// source-side chi(X, f^* delta_Y) and target-side chi(Y, f_* f^* delta_Y)
std::pair<Int, Int> dt_generalized(const CellMap& f, const ConstructibleFunction& delta_y);

// nu_X = f^* nu_Y (untwisted) or the same after twisting both sides
bool is_behrend_morphism(const CellMap& f, const BehrendData& nu_x, const BehrendData& nu_y, bool twisted);

// Integer cycle: cell c stands for the irreducible closed set cl(c).
class Cycle {
public:
    Cycle(SpacePtr space, std::vector<Int> multiplicities);
    static Cycle zero(const SpacePtr& space);
    static Cycle of_cell(const SpacePtr& space, int cell, Int mult = Int(1));

    const SpacePtr& space() const { return space_; }
    const std::vector<Int>& multiplicities() const { return mult_; }
    const Int& at(int cell) const { return mult_[cell]; }
    Int& at(int cell) { return mult_[cell]; }

    bool operator==(const Cycle& other) const {
        return same_space(space_, other.space_) && mult_ == other.mult_;
    }

private:
    SpacePtr space_;
    std::vector<Int> mult_;
};

// Unitriangular integer matrix E[sub][super], nonzero only for sub <= super,
// with 1 on the diagonal; invertible over the integers by construction.
class EuMatrix {
public:
    // entries given as (sub, super, value) triples for sub < super;
    // anything off the order or a non-1 diagonal raises NotUnitriangular
    static EuMatrix make(SpacePtr space, const std::vector<std::tuple<int, int, Int>>& entries);
    static EuMatrix identity(SpacePtr space);
    // E[sub][super] = 1 for every sub <= super: the matrix of cl(c) |-> 1_cl(c)
    static EuMatrix indicator_of_closure(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    const Int& entry(int sub, int super) const { return entries_[sub][super]; }

    // Eu(sum m_c [cl(c)]) = sum_c m_c sum_{c' <= c} E[c'][c] 1_{c'}
    ConstructibleFunction apply(const Cycle& z) const;
    // exact unitriangular back-substitution; apply(invert(a)) == a
    Cycle invert(const ConstructibleFunction& alpha) const;

    // plain linear action on coordinate vectors (used by transport)
    std::vector<Int> apply_vec(const std::vector<Int>& v) const;
    std::vector<Int> solve_vec(const std::vector<Int>& v) const;

    bool operator==(const EuMatrix& other) const {
        return same_space(space_, other.space_) && entries_ == other.entries_;
    }

private:
    explicit EuMatrix(SpacePtr space);

    SpacePtr space_;
    std::vector<std::vector<Int>> entries_;
};

// the tautological cycle presentation D with 1l(D) = alpha
Cycle cf_to_cycle(const ConstructibleFunction& alpha);

// Eu-transform a cycle and wrap the result as user Behrend data
BehrendData nu_from_cycle(const EuMatrix& eu, const Cycle& z);

}  // namespace eucalc

#endif
