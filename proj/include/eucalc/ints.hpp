#ifndef EUCALC_INTS_HPP
#define EUCALC_INTS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace eucalc {

// All arithmetic in the workbench is exact. Values that users can scale,
// multiply pointwise, or raise to polynomial powers are arbitrary-precision.
using Int = mpz_class;

inline int sign_pow(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

// Dense integer polynomial in one formal variable, used for chi_y-genus
// values. Not truncated; degrees stay tiny (bounded by dimensions).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(Int value) { return IntPolynomial({std::move(value)}); }
    static IntPolynomial variable() { return IntPolynomial({Int(0), Int(1)}); }

    void add_term(int power, const Int& coeff) {
        if (coeff == 0) return;
        if (static_cast<int>(coeffs_.size()) <= power) coeffs_.resize(power + 1, Int(0));
        coeffs_[power] += coeff;
        normalize();
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Int coefficient(int power) const {
        if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Int(0);
        return coeffs_[power];
    }

    Int evaluate(const Int& x) const {
        Int acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& other) {
        if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Int(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }

    IntPolynomial operator-(const IntPolynomial& other) const {
        IntPolynomial out = *this;
        if (out.coeffs_.size() < other.coeffs_.size()) out.coeffs_.resize(other.coeffs_.size(), Int(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
        out.normalize();
        return out;
    }

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPolynomial& other) const { return !(*this == other); }

    std::string str(const std::string& var = "y") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += coeffs_[i].get_str();
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

}  // namespace eucalc

#endif
