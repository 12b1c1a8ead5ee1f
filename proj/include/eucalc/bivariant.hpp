#ifndef EUCALC_BIVARIANT_HPP
#define EUCALC_BIVARIANT_HPP

/*
  The simple bivariant theory of constructible functions: the group attached
  to f: X -> Y is F(X), with

      product      a . b        = a * f^*(b)        over the composite
      pushforward  along f      = f_* a             (every map is proper here)
      pullback     along square = (corner -> X)^* a

  and its Behrend subtheory: the integer span of 1_cl(c) * f^* twisted-nu_Y
  over single-cell closures. Membership in the span is decided exactly over
  the integers via Hermite normal form, with certificates either way.

  A transport family conjugates all three operations through unitriangular
  isomorphisms, one per space, giving the transported theory together with
  the tautological Grothendieck transformation.
*/

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eucalc/behrend.hpp"
#include "eucalc/cell_space.hpp"
#include "eucalc/constructible.hpp"
#include "eucalc/hnf.hpp"

namespace eucalc {

struct BivariantElement {
    CellMap morphism;               // f: X -> Y
    ConstructibleFunction value;    // on X

    BivariantElement(CellMap f, ConstructibleFunction v);
};

// a over f: X -> Y times b over g: Y -> Z, landing over g o f
BivariantElement biv_product(const BivariantElement& a, const BivariantElement& b);

// a over g o f: X -> Z pushed along f: X -> Y, landing over g
BivariantElement biv_pushforward(const CellMap& f, const CellMap& g, const BivariantElement& a);

// a over square.f pulled back along square.g, landing over the corner's
// right leg. When behrend_tracking is set the base leg must be smooth.
BivariantElement biv_pullback(const FiberSquare& square, const BivariantElement& a,
                              bool behrend_tracking = false);

enum class GeneratorStyle { ClosedCells, LocallyClosedCells };

class GeneratorLattice {
public:
    // generators 1_S * f^* twisted(nu_Y), S = cl(c) (or the single cell c in
    // the locally closed variant) for each cell c of the source
    GeneratorLattice(CellMap f, BehrendData behrend_target,
                     GeneratorStyle style = GeneratorStyle::ClosedCells);

    const CellMap& morphism() const { return f_; }
    const BehrendData& behrend_target() const { return behrend_target_; }
    GeneratorStyle style() const { return style_; }
    const std::vector<ConstructibleFunction>& generators() const { return generators_; }
    const HermiteForm& hermite_basis() const { return hnf_; }

private:
    CellMap f_;
    BehrendData behrend_target_;
    GeneratorStyle style_;
    std::vector<ConstructibleFunction> generators_;
    HermiteForm hnf_;
};

struct MembershipCertificate {
    bool member = false;
    // per-cell coefficients a_S recombining the generators to the query
    std::optional<std::vector<Int>> coefficients;
    // on failure: the coordinate and the divisibility that cannot be met
    std::optional<std::string> obstruction_cell;
    std::optional<Int> obstruction_value;
    std::optional<Int> obstruction_modulus;
};

MembershipCertificate membership(const GeneratorLattice& lattice, const ConstructibleFunction& alpha);

// recombine generators with the certificate's coefficients
ConstructibleFunction recombine(const GeneratorLattice& lattice, const std::vector<Int>& coefficients);

// One unitriangular isomorphism per space, keyed by space name. Conjugating
// the three simple operations through the family yields the transported
// theory; theta itself is then a Grothendieck transformation by construction.
class TransportFamily {
public:
    void set(const EuMatrix& theta);
    static TransportFamily identity_on(const std::vector<SpacePtr>& spaces);
    static TransportFamily indicator_on(const std::vector<SpacePtr>& spaces);

    const EuMatrix& matrix_for(const SpacePtr& space) const;

    ConstructibleFunction to_transported(const ConstructibleFunction& alpha) const;
    ConstructibleFunction from_transported(const ConstructibleFunction& alpha) const;

private:
    std::map<std::string, EuMatrix> by_space_;
};

// theta(theta^{-1} a . theta^{-1} b)
BivariantElement transported_product(const TransportFamily& theta, const BivariantElement& a,
                                     const BivariantElement& b);
// theta o f_* o theta^{-1}
BivariantElement transported_pushforward(const TransportFamily& theta, const CellMap& f,
                                         const CellMap& g, const BivariantElement& a);
// theta o g^* o theta^{-1}
BivariantElement transported_pullback(const TransportFamily& theta, const FiberSquare& square,
                                      const BivariantElement& a);

}  // namespace eucalc

#endif
