#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partsign/bigint.hpp"

namespace partsign {

// Dense univariate polynomial over exact integers. coeffs[i] multiplies t^i;
// the representation is normalized (no trailing zero coefficients), so the
// zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(BigInt v);
    static Poly monomial(std::size_t degree, BigInt coeff = 1);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    // coefficient of t^i, zero beyond the stored range
    const BigInt& coeff(std::size_t i) const;
    BigInt& mutable_coeff(std::size_t i);

    void trim();

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const BigInt& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // dst += t^shift * src; the inner step of the product DP.
    void add_shifted(const Poly& src, std::size_t shift);

    // t * d/dt applied k times: coefficient of t^i is scaled by i^k (0^0 = 1,
    // so k = 0 is the identity).
    Poly delta_pow(unsigned k) const;

    Poly derivative() const;

    // exact value at t = -1 (alternating coefficient sum)
    BigInt eval_at_minus_one() const;
    BigInt eval_at_one() const;

    // human-readable form like "t + 2t^2"; "0" for the zero polynomial
    std::string to_string() const;

private:
    std::vector<BigInt> c_;
};

// First N+1 coefficients of num/den as a power series; requires den(0) = ±1
// so the division stays in the integers.
std::vector<BigInt> rational_series(const Poly& num, const Poly& den, std::int64_t n_max);

} // namespace partsign
