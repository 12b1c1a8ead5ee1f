#include "eucalc/constructible.hpp"

#include <map>

namespace eucalc {

namespace {

void require_same_space(const ConstructibleFunction& a, const ConstructibleFunction& b) {
    if (!same_space(a.space(), b.space()))
        throw Error(Err::SpaceMismatch,
                    "operands live on '" + a.space()->name() + "' and '" + b.space()->name() + "'");
}

}  // namespace

ConstructibleFunction::ConstructibleFunction(SpacePtr space, std::vector<Int> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != space_->size())
        throw Error(Err::SpaceMismatch, "value table does not match cell count of '" + space_->name() + "'");
}

ConstructibleFunction ConstructibleFunction::zero(const SpacePtr& space) {
    return ConstructibleFunction(space, std::vector<Int>(space->size(), Int(0)));
}

ConstructibleFunction ConstructibleFunction::constant(const SpacePtr& space, Int value) {
    return ConstructibleFunction(space, std::vector<Int>(space->size(), std::move(value)));
}

ConstructibleFunction ConstructibleFunction::indicator(const CellSubset& subset) {
    auto out = zero(subset.space());
    for (int m : subset.members()) out.values_[m] = 1;
    return out;
}

bool ConstructibleFunction::is_zero() const {
    for (const auto& v : values_)
        if (v != 0) return false;
    return true;
}

ConstructibleFunction ConstructibleFunction::operator+(const ConstructibleFunction& other) const {
    require_same_space(*this, other);
    auto out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] += other.values_[i];
    return out;
}

ConstructibleFunction ConstructibleFunction::operator-(const ConstructibleFunction& other) const {
    require_same_space(*this, other);
    auto out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] -= other.values_[i];
    return out;
}

ConstructibleFunction ConstructibleFunction::operator*(const ConstructibleFunction& other) const {
    require_same_space(*this, other);
    auto out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] *= other.values_[i];
    return out;
}

ConstructibleFunction ConstructibleFunction::scaled(const Int& k) const {
    auto out = *this;
    for (auto& v : out.values_) v *= k;
    return out;
}

ConstructibleFunction ConstructibleFunction::pointwise_power(int exponent) const {
    auto out = ConstructibleFunction::constant(space_, Int(1));
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

bool ConstructibleFunction::operator==(const ConstructibleFunction& other) const {
    return same_space(space_, other.space_) && values_ == other.values_;
}

ConstructibleFunction pullback_cf(const CellMap& f, const ConstructibleFunction& beta) {
    if (!same_space(beta.space(), f.target()))
        throw Error(Err::SpaceMismatch, "pullback expects a function on '" + f.target()->name() + "'");
    std::vector<Int> values(f.source()->size());
    for (int e = 0; e < f.source()->size(); ++e) values[e] = beta.at(f.apply(e));
    return ConstructibleFunction(f.source(), std::move(values));
}

ConstructibleFunction pushforward_cf(const CellMap& f, const ConstructibleFunction& alpha) {
    if (!same_space(alpha.space(), f.source()))
        throw Error(Err::SpaceMismatch, "pushforward expects a function on '" + f.source()->name() + "'");
    const Mode mode = f.source()->mode();
    std::vector<Int> values(f.target()->size(), Int(0));
    for (int e = 0; e < f.source()->size(); ++e)
        values[f.apply(e)] += alpha.at(e) * fiber_weight(mode, f.fiber_dim(e));
    return ConstructibleFunction(f.target(), std::move(values));
}

Int euler_integral(const ConstructibleFunction& alpha) {
    Int total(0);
    const auto& space = alpha.space();
    for (int c = 0; c < space->size(); ++c) total += alpha.at(c) * space->weight(c);
    return total;
}

Int weighted_euler_oracle(const ConstructibleFunction& alpha) {
    // group the strata into level sets, then sum m * chi_c(level set)
    std::map<Int, std::vector<int>> levels;
    for (int c = 0; c < alpha.space()->size(); ++c) levels[alpha.at(c)].push_back(c);
    Int total(0);
    for (const auto& [value, cells] : levels) {
        if (value == 0) continue;
        total += value * euler_cc(CellSubset(alpha.space(), cells));
    }
    return total;
}

IntPolynomial genus_integral(const ConstructibleFunction& alpha) {
    const auto& space = alpha.space();
    if (space->mode() != Mode::Algebraic)
        throw Error(Err::ModeUnsupported, "genus evaluation needs an algebraic-mode space");
    IntPolynomial out;
    for (int c = 0; c < space->size(); ++c) {
        int d = space->dim_of(c);
        out.add_term(d, alpha.at(c) * sign_pow(d));
    }
    return out;
}

ConstructibleFunction restrict_cf(const ConstructibleFunction& alpha, const Subspace& sub) {
    return pullback_cf(sub.inclusion, alpha);
}

ConstructibleFunction cf_poly(const IntPolynomial& p, const ConstructibleFunction& beta) {
    auto out = ConstructibleFunction::zero(beta.space());
    auto power = ConstructibleFunction::constant(beta.space(), Int(1));
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coefficient(i) != 0) out = out + power.scaled(p.coefficient(i));
        power = power * beta;
    }
    return out;
}

}  // namespace eucalc
