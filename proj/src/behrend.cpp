#include "eucalc/behrend.hpp"

#include <algorithm>
#include <numeric>

namespace eucalc {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Smooth: return "smooth";
        case Provenance::Product: return "product";
        case Provenance::SmoothPullback: return "smooth-pullback";
        case Provenance::User: return "user";
    }
    return "user";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "smooth") return Provenance::Smooth;
    if (name == "product") return Provenance::Product;
    if (name == "smooth-pullback") return Provenance::SmoothPullback;
    if (name == "user") return Provenance::User;
    throw Error(Err::SchemaError, "unknown provenance '" + name + "'");
}

BehrendData::BehrendData(SpacePtr space, std::vector<Int> values, Provenance provenance)
    : space_(std::move(space)), values_(std::move(values)), provenance_(provenance) {
    if (static_cast<int>(values_.size()) != space_->size())
        throw Error(Err::SpaceMismatch, "Behrend table does not match cell count");
}

BehrendData BehrendData::smooth(SpacePtr space) {
    Int v(sign_pow(space->variety_dim()));
    std::vector<Int> values(space->size(), v);
    return BehrendData(std::move(space), std::move(values), Provenance::Smooth);
}

BehrendData BehrendData::product(const BehrendData& a, const BehrendData& b) {
    auto prod = product_space(a.space(), b.space());
    std::vector<Int> values(prod.space->size());
    for (int w = 0; w < prod.space->size(); ++w)
        values[w] = a.at(prod.to_left.apply(w)) * b.at(prod.to_right.apply(w));
    return BehrendData(prod.space, std::move(values), Provenance::Product);
}

BehrendData BehrendData::smooth_pullback(const CellMap& f, const BehrendData& nu_y) {
    if (!f.smooth())
        throw Error(Err::SmoothFlagRequired, "Behrend pullback needs a smooth map");
    if (!same_space(nu_y.space(), f.target()))
        throw Error(Err::SpaceMismatch, "Behrend data does not live on the map target");
    const int rel_dim = f.source()->empty() ? 0 : f.fiber_dim(0);
    std::vector<Int> values(f.source()->size());
    for (int e = 0; e < f.source()->size(); ++e)
        values[e] = Int(sign_pow(rel_dim)) * nu_y.at(f.apply(e));
    return BehrendData(f.source(), std::move(values), Provenance::SmoothPullback);
}

BehrendData BehrendData::user(SpacePtr space, std::vector<Int> values) {
    return BehrendData(std::move(space), std::move(values), Provenance::User);
}

BehrendData BehrendData::from_document(SpacePtr space, std::vector<Int> values, Provenance provenance) {
    if (provenance == Provenance::Smooth) {
        Int expected(sign_pow(space->variety_dim()));
        for (const auto& v : values)
            if (v != expected)
                throw Error(Err::SchemaError,
                            "smooth Behrend data must be the constant " + expected.get_str());
    }
    return BehrendData(std::move(space), std::move(values), provenance);
}

BehrendData BehrendData::twisted() const {
    Int sign(sign_pow(space_->variety_dim()));
    std::vector<Int> values = values_;
    for (auto& v : values) v *= sign;
    return BehrendData(space_, std::move(values), provenance_);
}

BehrendData twist_behrend(const BehrendData& b) { return b.twisted(); }

Int dt_invariant(const BehrendData& nu) { return euler_integral(nu.as_cf()); }

Int dt_invariant(const CellMap& f, const BehrendData& nu_y) {
    if (!same_space(nu_y.space(), f.target()))
        throw Error(Err::SpaceMismatch, "Behrend data does not live on the map target");
    return euler_integral(pullback_cf(f, nu_y.as_cf()));
}

std::pair<Int, Int> dt_generalized(const CellMap& f, const ConstructibleFunction& delta_y) {
    if (!same_space(delta_y.space(), f.target()))
        throw Error(Err::SpaceMismatch, "delta does not live on the map target");
    auto pulled = pullback_cf(f, delta_y);
    Int source_side = euler_integral(pulled);
    Int target_side = euler_integral(pushforward_cf(f, pulled));
    return {source_side, target_side};
}

bool is_behrend_morphism(const CellMap& f, const BehrendData& nu_x, const BehrendData& nu_y, bool twisted) {
    if (!same_space(nu_x.space(), f.source()) || !same_space(nu_y.space(), f.target()))
        throw Error(Err::SpaceMismatch, "Behrend data does not match the morphism");
    if (twisted)
        return twist_behrend(nu_x).as_cf() == pullback_cf(f, twist_behrend(nu_y).as_cf());
    return nu_x.as_cf() == pullback_cf(f, nu_y.as_cf());
}

Cycle::Cycle(SpacePtr space, std::vector<Int> multiplicities)
    : space_(std::move(space)), mult_(std::move(multiplicities)) {
    if (static_cast<int>(mult_.size()) != space_->size())
        throw Error(Err::SpaceMismatch, "cycle table does not match cell count");
}

Cycle Cycle::zero(const SpacePtr& space) { return Cycle(space, std::vector<Int>(space->size(), Int(0))); }

Cycle Cycle::of_cell(const SpacePtr& space, int cell, Int mult) {
    auto z = zero(space);
    z.at(cell) = std::move(mult);
    return z;
}

EuMatrix::EuMatrix(SpacePtr space) : space_(std::move(space)) {
    const int n = space_->size();
    entries_.assign(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) entries_[i][i] = 1;
}

EuMatrix EuMatrix::make(SpacePtr space, const std::vector<std::tuple<int, int, Int>>& entries) {
    EuMatrix eu(std::move(space));
    for (const auto& [sub, super, value] : entries) {
        if (sub == super) {
            if (value != 1)
                throw Error(Err::NotUnitriangular, "diagonal entry at '" + eu.space_->cell(sub).id + "' must be 1");
            continue;
        }
        if (!eu.space_->strictly_less(sub, super))
            throw Error(Err::NotUnitriangular, "entry (" + eu.space_->cell(sub).id + ", " +
                                                   eu.space_->cell(super).id + ") is off the closure order");
        eu.entries_[sub][super] = value;
    }
    return eu;
}

EuMatrix EuMatrix::identity(SpacePtr space) { return EuMatrix(std::move(space)); }

EuMatrix EuMatrix::indicator_of_closure(SpacePtr space) {
    EuMatrix eu(std::move(space));
    const int n = eu.space_->size();
    for (int sub = 0; sub < n; ++sub)
        for (int super = 0; super < n; ++super)
            if (eu.space_->strictly_less(sub, super)) eu.entries_[sub][super] = 1;
    return eu;
}

std::vector<Int> EuMatrix::apply_vec(const std::vector<Int>& v) const {
    const int n = space_->size();
    std::vector<Int> out(n, Int(0));
    for (int sub = 0; sub < n; ++sub)
        for (int super = 0; super < n; ++super)
            if (entries_[sub][super] != 0) out[sub] += entries_[sub][super] * v[super];
    return out;
}

std::vector<Int> EuMatrix::solve_vec(const std::vector<Int>& v) const {
    // Process cells from the top of the poset down; the frontier condition
    // means descending dimension is a valid elimination order.
    const int n = space_->size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return space_->dim_of(a) > space_->dim_of(b); });
    std::vector<Int> out(n, Int(0));
    for (int c : order) {
        Int acc = v[c];
        for (int super = 0; super < n; ++super)
            if (space_->strictly_less(c, super)) acc -= entries_[c][super] * out[super];
        out[c] = acc;
    }
    return out;
}

ConstructibleFunction EuMatrix::apply(const Cycle& z) const {
    if (!same_space(z.space(), space_))
        throw Error(Err::SpaceMismatch, "cycle lives on a different space");
    return ConstructibleFunction(space_, apply_vec(z.multiplicities()));
}

Cycle EuMatrix::invert(const ConstructibleFunction& alpha) const {
    if (!same_space(alpha.space(), space_))
        throw Error(Err::SpaceMismatch, "function lives on a different space");
    return Cycle(space_, solve_vec(alpha.values()));
}

Cycle cf_to_cycle(const ConstructibleFunction& alpha) {
    return EuMatrix::indicator_of_closure(alpha.space()).invert(alpha);
}

BehrendData nu_from_cycle(const EuMatrix& eu, const Cycle& z) {
    return BehrendData::user(z.space(), eu.apply(z).values());
}

}  // namespace eucalc
