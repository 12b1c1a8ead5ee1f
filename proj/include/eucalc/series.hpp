#ifndef EUCALC_SERIES_HPP
#define EUCALC_SERIES_HPP

/*
  Truncated integer power series, the MacMahon function prod (1-q^n)^(-n),
  and a brute-force plane-partition counter that certifies its coefficients.
  No floating point anywhere; coefficients are arbitrary-precision.
*/

#include <vector>

#include "eucalc/ints.hpp"

namespace eucalc {

class TruncatedSeries {
public:
    // coefficients c_0 .. c_order
    TruncatedSeries(int order, std::vector<Int> coefficients);
    static TruncatedSeries one(int order);
    static TruncatedSeries zero(int order);

    int order() const { return order_; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    const Int& coefficient(int k) const { return coeffs_[k]; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;

    // multiplicative inverse; needs c_0 = +-1 (NotInvertible otherwise)
    TruncatedSeries inverse() const;

    bool operator==(const TruncatedSeries& other) const {
        return order_ == other.order_ && coeffs_ == other.coeffs_;
    }

private:
    int order_;
    std::vector<Int> coeffs_;
};

// prod_{n >= 1} (1 - q^n)^(-n) mod q^(order+1)
TruncatedSeries macmahon_series(int order);

// s^n mod q^(order+1) by binary exponentiation; the exponent is the caller's
// integer (e.g. a Chern number); negative exponents need invertible s
TruncatedSeries series_power(const TruncatedSeries& s, long long n, int order);

// exhaustive count of plane partitions of n (arrays non-increasing along
// rows and columns summing to n); BoundExceeded above the small bound
constexpr int kPlanePartitionBound = 12;
Int plane_partition_oracle(int n);

}  // namespace eucalc

#endif
