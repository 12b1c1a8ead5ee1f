#include "eucalc/motivic.hpp"

namespace eucalc {

MotivicClass::MotivicClass(SpacePtr space, Table table) : space_(std::move(space)) {
    for (auto& [key, mult] : table) {
        if (key.first < 0 || key.first >= space_->size())
            throw Error(Err::UnknownCell, "class entry over a cell outside the space");
        if (key.second < 0) throw Error(Err::SchemaError, "negative fiber dimension in class table");
        if (mult != 0) table_.emplace(key, std::move(mult));
    }
}

MotivicClass MotivicClass::unit(const SpacePtr& space) {
    MotivicClass out(space);
    for (int c = 0; c < space->size(); ++c) out.add(c, 0, Int(1));
    return out;
}

void MotivicClass::add(int cell, int fiber_dim, const Int& mult) {
    if (mult == 0) return;
    auto key = std::make_pair(cell, fiber_dim);
    auto it = table_.find(key);
    if (it == table_.end()) {
        table_.emplace(key, mult);
        return;
    }
    it->second += mult;
    if (it->second == 0) table_.erase(it);
}

Int MotivicClass::at(int cell, int fiber_dim) const {
    auto it = table_.find({cell, fiber_dim});
    return it == table_.end() ? Int(0) : it->second;
}

MotivicClass MotivicClass::operator+(const MotivicClass& other) const {
    if (!same_space(space_, other.space_)) throw Error(Err::SpaceMismatch, "class addition across spaces");
    MotivicClass out = *this;
    for (const auto& [key, mult] : other.table_) out.add(key.first, key.second, mult);
    return out;
}

MotivicClass MotivicClass::operator-(const MotivicClass& other) const {
    return *this + other.scaled(Int(-1));
}

MotivicClass MotivicClass::scaled(const Int& k) const {
    MotivicClass out(space_);
    if (k == 0) return out;
    for (const auto& [key, mult] : table_) out.table_.emplace(key, mult * k);
    return out;
}

void ClassPresentation::add_term(Int coefficient, CellMap h) {
    if (!target) target = h.target();
    if (!same_space(target, h.target()))
        throw Error(Err::TargetMismatch, "presentation terms must share the target space");
    terms.emplace_back(std::move(coefficient), std::move(h));
}

MotivicClass scissor_nf(const ClassPresentation& p) {
    if (!p.target) throw Error(Err::TargetMismatch, "empty presentation has no target");
    MotivicClass out(p.target);
    for (const auto& [coeff, h] : p.terms) {
        if (!same_space(h.target(), p.target))
            throw Error(Err::TargetMismatch, "presentation term maps into a different space");
        for (int e = 0; e < h.source()->size(); ++e) out.add(h.apply(e), h.fiber_dim(e), coeff);
    }
    return out;
}

MotivicClass scissor_nf(const CellMap& h) {
    ClassPresentation p;
    p.add_term(Int(1), h);
    return scissor_nf(p);
}

MotivicClass k0_pushforward(const CellMap& g, const MotivicClass& xi) {
    if (!same_space(xi.space(), g.source()))
        throw Error(Err::SpaceMismatch, "class does not live on the map source");
    MotivicClass out(g.target());
    for (const auto& [key, mult] : xi.table())
        out.add(g.apply(key.first), key.second + g.fiber_dim(key.first), mult);
    return out;
}

MotivicClass k0_pullback(const CellMap& g, const MotivicClass& xi) {
    if (!same_space(xi.space(), g.target()))
        throw Error(Err::SpaceMismatch, "class does not live on the map target");
    MotivicClass out(g.source());
    for (const auto& [key, mult] : xi.table())
        for (int e = 0; e < g.source()->size(); ++e)
            if (g.apply(e) == key.first) out.add(e, key.second, mult);
    return out;
}

MotivicClass psi_product(const MotivicClass& a, const MotivicClass& b) {
    if (!same_space(a.space(), b.space())) throw Error(Err::SpaceMismatch, "product across spaces");
    MotivicClass out(a.space());
    for (const auto& [ka, ma] : a.table())
        for (const auto& [kb, mb] : b.table())
            if (ka.first == kb.first) out.add(ka.first, ka.second + kb.second, ma * mb);
    return out;
}

MotivicClass psi_power(const MotivicClass& xi, int k) {
    auto out = MotivicClass::unit(xi.space());
    for (int i = 0; i < k; ++i) out = psi_product(out, xi);
    return out;
}

ConstructibleFunction one_star(const MotivicClass& xi) {
    const Mode mode = xi.space()->mode();
    auto out = ConstructibleFunction::zero(xi.space());
    for (const auto& [key, mult] : xi.table())
        out.at(key.first) += mult * fiber_weight(mode, key.second);
    return out;
}

ConstructibleFunction bracket_delta(const ConstructibleFunction& delta, const MotivicClass& xi) {
    if (!same_space(delta.space(), xi.space()))
        throw Error(Err::SpaceMismatch, "delta lives on a different space");
    return one_star(xi) * delta;
}

MotivicClass section(const ConstructibleFunction& alpha) {
    MotivicClass out(alpha.space());
    for (int c = 0; c < alpha.space()->size(); ++c) out.add(c, 0, alpha.at(c));
    return out;
}

MotivicClass nu_mot(const BehrendData& b) { return section(b.as_cf()); }

MotivicClass psi_poly(const IntPolynomial& p, const MotivicClass& xi) {
    MotivicClass out(xi.space());
    auto power = MotivicClass::unit(xi.space());
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coefficient(i) != 0) out = out + power.scaled(p.coefficient(i));
        power = psi_product(power, xi);
    }
    return out;
}

IntPolynomial genus_eval(const MotivicClass& xi) {
    if (xi.space()->mode() != Mode::Algebraic)
        throw Error(Err::ModeUnsupported, "genus evaluation needs an algebraic-mode space");
    IntPolynomial out;
    for (const auto& [key, mult] : xi.table()) {
        int power = xi.space()->dim_of(key.first) + key.second;
        out.add_term(power, mult * sign_pow(power));
    }
    return out;
}

IntPolynomial chi_y_dt(const BehrendData& b) { return genus_eval(nu_mot(twist_behrend(b))); }

}  // namespace eucalc
