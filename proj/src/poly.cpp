#include "partsign/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace partsign {

namespace {
const BigInt kZero = 0;
}

Poly Poly::constant(BigInt v) {
    Poly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(std::size_t degree, BigInt coeff) {
    Poly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(degree + 1, BigInt(0));
    p.c_[degree] = std::move(coeff);
    return p;
}

const BigInt& Poly::coeff(std::size_t i) const {
    if (i >= c_.size()) return kZero;
    return c_[i];
}

BigInt& Poly::mutable_coeff(std::size_t i) {
    if (i >= c_.size()) c_.resize(i + 1, BigInt(0));
    return c_[i];
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue; // divisor polys are sparse
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const BigInt& s) const {
    if (s.is_zero()) return Poly{};
    Poly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

void Poly::add_shifted(const Poly& src, std::size_t shift) {
    if (src.is_zero()) return;
    if (c_.size() < src.c_.size() + shift) c_.resize(src.c_.size() + shift, BigInt(0));
    for (std::size_t i = 0; i < src.c_.size(); ++i) c_[i + shift] += src.c_[i];
}

Poly Poly::delta_pow(unsigned k) const {
    if (k == 0) return *this;
    Poly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
        if (!r.c_[i].is_zero()) r.c_[i] *= int_pow(BigInt(i), k);
    }
    if (!r.c_.empty()) r.c_[0] = 0; // 0^k = 0 for k >= 1
    r.trim();
    return r;
}

Poly Poly::derivative() const {
    Poly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * i;
    r.trim();
    return r;
}

BigInt Poly::eval_at_minus_one() const {
    BigInt s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i & 1)
            s -= c_[i];
        else
            s += c_[i];
    }
    return s;
}

BigInt Poly::eval_at_one() const {
    BigInt s = 0;
    for (const auto& v : c_) s += v;
    return s;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        BigInt v = c_[i];
        if (first) {
            if (v.sign() < 0) out << "-", v = -v;
        } else {
            out << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        if (i == 0 || v != 1) out << v.str();
        if (i >= 1) {
            out << "t";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::vector<BigInt> rational_series(const Poly& num, const Poly& den, std::int64_t n_max) {
    if (den.is_zero() || !(den.coeff(0) == 1 || den.coeff(0) == -1))
        throw std::invalid_argument("rational_series: denominator constant term must be +-1");
    const BigInt d0 = den.coeff(0);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    const std::int64_t dd = den.degree();
    for (std::int64_t n = 0; n <= n_max; ++n) {
        BigInt v = num.coeff(static_cast<std::size_t>(n));
        const std::int64_t j_hi = std::min<std::int64_t>(n, dd);
        for (std::int64_t j = 1; j <= j_hi; ++j)
            v -= den.coeff(static_cast<std::size_t>(j)) * out[static_cast<std::size_t>(n - j)];
        if (d0 == -1) v = -v;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace partsign
