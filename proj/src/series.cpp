#include "eucalc/series.hpp"

#include "eucalc/errors.hpp"

namespace eucalc {

TruncatedSeries::TruncatedSeries(int order, std::vector<Int> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
    if (order_ < 0) throw Error(Err::BoundExceeded, "truncation order must be non-negative");
    coeffs_.resize(order_ + 1, Int(0));
}

TruncatedSeries TruncatedSeries::one(int order) {
    std::vector<Int> c(order + 1, Int(0));
    c[0] = 1;
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(order, std::vector<Int>(order + 1, Int(0)));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    if (order_ != other.order_) throw Error(Err::BoundExceeded, "truncation orders differ");
    auto out = coeffs_;
    for (int k = 0; k <= order_; ++k) out[k] += other.coeffs_[k];
    return TruncatedSeries(order_, std::move(out));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    if (order_ != other.order_) throw Error(Err::BoundExceeded, "truncation orders differ");
    std::vector<Int> out(order_ + 1, Int(0));
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (other.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return TruncatedSeries(order_, std::move(out));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] != 1 && coeffs_[0] != -1)
        throw Error(Err::NotInvertible, "constant term must be 1 or -1");
    const Int lead = coeffs_[0];  // its own inverse
    std::vector<Int> out(order_ + 1, Int(0));
    out[0] = lead;
    for (int k = 1; k <= order_; ++k) {
        Int acc(0);
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * out[k - j];
        out[k] = -lead * acc;
    }
    return TruncatedSeries(order_, std::move(out));
}

TruncatedSeries macmahon_series(int order) {
    if (order < 0) throw Error(Err::BoundExceeded, "truncation order must be non-negative");
    auto result = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        // geometric series 1/(1-q^n), then its n-th power
        std::vector<Int> geo(order + 1, Int(0));
        for (int k = 0; n * k <= order; ++k) geo[n * k] = 1;
        result = result * series_power(TruncatedSeries(order, std::move(geo)), n, order);
    }
    return result;
}

TruncatedSeries series_power(const TruncatedSeries& s, long long n, int order) {
    TruncatedSeries base = s;
    if (base.order() != order)
        base = TruncatedSeries(order, std::vector<Int>(s.coefficients().begin(),
                                                       s.coefficients().begin() +
                                                           std::min(s.order(), order) + 1));
    unsigned long long e;
    if (n < 0) {
        base = base.inverse();
        e = static_cast<unsigned long long>(-n);
    } else {
        e = static_cast<unsigned long long>(n);
    }
    auto acc = TruncatedSeries::one(order);
    while (e > 0) {
        if (e & 1ULL) acc = acc * base;
        base = base * base;
        e >>= 1ULL;
    }
    return acc;
}

namespace {

// Number of ways to stack further rows summing to `remaining` under `bound`.
// Rows are weakly decreasing positive sequences; each row is bounded
// componentwise by the one above it and may not be longer than it (a longer
// row would break the column condition). An empty bound means the first,
// unconstrained row.
Int count_rows(const std::vector<int>& bound, int remaining) {
    if (remaining == 0) return Int(1);
    Int total(0);
    std::vector<int> row;
    int used = 0;
    // depth-first enumeration of the next row
    auto walk = [&](auto&& self) -> void {
        if (!row.empty()) total += count_rows(row, remaining - used);
        const int pos = static_cast<int>(row.size());
        int cap = row.empty() ? remaining : row.back();
        if (!bound.empty()) {
            if (pos >= static_cast<int>(bound.size())) return;  // row may not outgrow the one above
            cap = std::min(cap, bound[pos]);
        }
        cap = std::min(cap, remaining - used);
        for (int v = cap; v >= 1; --v) {
            row.push_back(v);
            used += v;
            self(self);
            used -= v;
            row.pop_back();
        }
    };
    walk(walk);
    return total;
}

}  // namespace

Int plane_partition_oracle(int n) {
    if (n < 0 || n > kPlanePartitionBound)
        throw Error(Err::BoundExceeded, "plane partition oracle only counts up to size " +
                                            std::to_string(kPlanePartitionBound));
    if (n == 0) return Int(1);
    return count_rows({}, n);
}

}  // namespace eucalc
