#include "eucalc/bivariant.hpp"

namespace eucalc {

BivariantElement::BivariantElement(CellMap f, ConstructibleFunction v)
    : morphism(std::move(f)), value(std::move(v)) {
    if (!same_space(value.space(), morphism.source()))
        throw Error(Err::SpaceMismatch, "bivariant value must live on the morphism source");
}

BivariantElement biv_product(const BivariantElement& a, const BivariantElement& b) {
    if (!same_space(a.morphism.target(), b.morphism.source()))
        throw Error(Err::ChainMismatch, "product needs chained morphisms X -> Y -> Z");
    auto composite = compose_maps(a.morphism, b.morphism);
    return BivariantElement(composite, a.value * pullback_cf(a.morphism, b.value));
}

BivariantElement biv_pushforward(const CellMap& f, const CellMap& g, const BivariantElement& a) {
    if (!same_space(f.target(), g.source()))
        throw Error(Err::ChainMismatch, "pushforward needs chained morphisms X -> Y -> Z");
    if (!(a.morphism == compose_maps(f, g)))
        throw Error(Err::ChainMismatch, "element does not live over the composite morphism");
    return BivariantElement(g, pushforward_cf(f, a.value));
}

BivariantElement biv_pullback(const FiberSquare& square, const BivariantElement& a,
                              bool behrend_tracking) {
    if (!(a.morphism == square.f))
        throw Error(Err::ChainMismatch, "element does not live over the square's primary morphism");
    if (behrend_tracking && !square.g.smooth())
        throw Error(Err::SmoothRequired, "Behrend subtheory pullback needs a smooth base leg");
    return BivariantElement(square.to_right, pullback_cf(square.to_left, a.value));
}

GeneratorLattice::GeneratorLattice(CellMap f, BehrendData behrend_target, GeneratorStyle style)
    : f_(std::move(f)), behrend_target_(std::move(behrend_target)), style_(style) {
    if (!same_space(behrend_target_.space(), f_.target()))
        throw Error(Err::SpaceMismatch, "Behrend data must live on the morphism target");
    const auto& x = f_.source();
    auto pulled = pullback_cf(f_, twist_behrend(behrend_target_).as_cf());
    generators_.reserve(x->size());
    for (int c = 0; c < x->size(); ++c) {
        std::vector<int> members{c};
        if (style_ == GeneratorStyle::ClosedCells)
            for (int below = 0; below < x->size(); ++below)
                if (x->strictly_less(below, c)) members.push_back(below);
        generators_.push_back(ConstructibleFunction::indicator(CellSubset(x, members)) * pulled);
    }
    IntMatrix rows;
    rows.reserve(generators_.size());
    for (const auto& gen : generators_) rows.push_back(gen.values());
    hnf_ = hermite_form(rows);
}

MembershipCertificate membership(const GeneratorLattice& lattice, const ConstructibleFunction& alpha) {
    if (!same_space(alpha.space(), lattice.morphism().source()))
        throw Error(Err::SpaceMismatch, "query must live on the morphism source");
    auto result = lattice_membership(lattice.hermite_basis(),
                                     static_cast<int>(lattice.generators().size()), alpha.values());
    MembershipCertificate cert;
    cert.member = result.member;
    if (result.solution) cert.coefficients = std::move(result.solution->coefficients);
    if (result.obstruction) {
        cert.obstruction_cell = alpha.space()->cell(result.obstruction->column).id;
        cert.obstruction_value = result.obstruction->remainder;
        cert.obstruction_modulus = result.obstruction->modulus;
    }
    return cert;
}

ConstructibleFunction recombine(const GeneratorLattice& lattice, const std::vector<Int>& coefficients) {
    auto out = ConstructibleFunction::zero(lattice.morphism().source());
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        out = out + lattice.generators()[i].scaled(coefficients[i]);
    return out;
}

void TransportFamily::set(const EuMatrix& theta) {
    by_space_.insert_or_assign(theta.space()->name(), theta);
}

TransportFamily TransportFamily::identity_on(const std::vector<SpacePtr>& spaces) {
    TransportFamily fam;
    for (const auto& s : spaces) fam.set(EuMatrix::identity(s));
    return fam;
}

TransportFamily TransportFamily::indicator_on(const std::vector<SpacePtr>& spaces) {
    TransportFamily fam;
    for (const auto& s : spaces) fam.set(EuMatrix::indicator_of_closure(s));
    return fam;
}

const EuMatrix& TransportFamily::matrix_for(const SpacePtr& space) const {
    auto it = by_space_.find(space->name());
    if (it == by_space_.end() || !same_space(it->second.space(), space))
        throw Error(Err::NotUnitriangular, "no transport matrix registered for '" + space->name() + "'");
    return it->second;
}

ConstructibleFunction TransportFamily::to_transported(const ConstructibleFunction& alpha) const {
    return ConstructibleFunction(alpha.space(), matrix_for(alpha.space()).apply_vec(alpha.values()));
}

ConstructibleFunction TransportFamily::from_transported(const ConstructibleFunction& alpha) const {
    return ConstructibleFunction(alpha.space(), matrix_for(alpha.space()).solve_vec(alpha.values()));
}

BivariantElement transported_product(const TransportFamily& theta, const BivariantElement& a,
                                     const BivariantElement& b) {
    BivariantElement plain = biv_product(BivariantElement(a.morphism, theta.from_transported(a.value)),
                                         BivariantElement(b.morphism, theta.from_transported(b.value)));
    return BivariantElement(plain.morphism, theta.to_transported(plain.value));
}

BivariantElement transported_pushforward(const TransportFamily& theta, const CellMap& f,
                                         const CellMap& g, const BivariantElement& a) {
    BivariantElement plain =
        biv_pushforward(f, g, BivariantElement(a.morphism, theta.from_transported(a.value)));
    return BivariantElement(plain.morphism, theta.to_transported(plain.value));
}

BivariantElement transported_pullback(const TransportFamily& theta, const FiberSquare& square,
                                      const BivariantElement& a) {
    BivariantElement plain =
        biv_pullback(square, BivariantElement(a.morphism, theta.from_transported(a.value)));
    return BivariantElement(plain.morphism, theta.to_transported(plain.value));
}

}  // namespace eucalc
