#ifndef EUCALC_CONSTRUCTIBLE_HPP
#define EUCALC_CONSTRUCTIBLE_HPP

/*
  The group F(X) of constructible functions on a cell space: one integer per
  cell, since cells are the strata. Pullback evaluates along the assignment;
  pushforward sums fibers with the weight of the fiber cell, which makes the
  pushforward exact and strictly functorial (the characteristic-zero picture
  is hard-wired).
*/

#include <vector>

#include "eucalc/cell_space.hpp"
#include "eucalc/ints.hpp"

namespace eucalc {

class ConstructibleFunction {
public:
    ConstructibleFunction(SpacePtr space, std::vector<Int> values);
    static ConstructibleFunction zero(const SpacePtr& space);
    static ConstructibleFunction constant(const SpacePtr& space, Int value);
    static ConstructibleFunction indicator(const CellSubset& subset);

    const SpacePtr& space() const { return space_; }
    const std::vector<Int>& values() const { return values_; }
    const Int& at(int cell) const { return values_[cell]; }
    Int& at(int cell) { return values_[cell]; }

    bool is_zero() const;

    ConstructibleFunction operator+(const ConstructibleFunction& other) const;
    ConstructibleFunction operator-(const ConstructibleFunction& other) const;
    // pointwise (inner) product
    ConstructibleFunction operator*(const ConstructibleFunction& other) const;
    ConstructibleFunction scaled(const Int& k) const;
    ConstructibleFunction pointwise_power(int exponent) const;

    bool operator==(const ConstructibleFunction& other) const;
    bool operator!=(const ConstructibleFunction& other) const { return !(*this == other); }

private:
    SpacePtr space_;
    std::vector<Int> values_;
};

// value at e = beta(f(e))
ConstructibleFunction pullback_cf(const CellMap& f, const ConstructibleFunction& beta);

// value at c = sum over f(e) = c of alpha(e) * fiber_weight(Delta(e))
ConstructibleFunction pushforward_cf(const CellMap& f, const ConstructibleFunction& alpha);

// weighted Euler characteristic chi(X, alpha); equals pushforward to a point
Int euler_integral(const ConstructibleFunction& alpha);

// Independent oracle: the level-set formula sum_m m * chi_c(alpha^{-1}(m)),
// computed literally by grouping cells by value.
Int weighted_euler_oracle(const ConstructibleFunction& alpha);

// sum_c alpha(c) * (-y)^(dim c); algebraic mode only (ModeUnsupported else).
// Evaluating at y = -1 recovers euler_integral.
IntPolynomial genus_integral(const ConstructibleFunction& alpha);

// restriction of alpha to a subspace via pullback along the inclusion
ConstructibleFunction restrict_cf(const ConstructibleFunction& alpha, const Subspace& sub);

// cellwise polynomial application sum_i a_i * beta^i (so a_0 contributes the
// constant function a_0)
ConstructibleFunction cf_poly(const IntPolynomial& p, const ConstructibleFunction& beta);

}  // namespace eucalc

#endif
