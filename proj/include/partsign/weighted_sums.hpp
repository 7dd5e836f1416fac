#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partsign/partition.hpp"
#include "partsign/poly.hpp"
#include "partsign/set_spec.hpp"

namespace partsign {

// Divisor polynomials of n over A(n) = {a in A : a | n}:
//   p_{A,n}(t) = sum t^{n/a},   q_{A,n}(t) = sum a * t^{n/a}.
// At t = 1 they reduce to the divisor-count and divisor-sum functions
// restricted to A.
std::pair<Poly, Poly> divisor_polys(const SetSpec& spec, std::int64_t n);

// S_{A,k}(n) = sum_i (-1)^i i^k c_A(i,n), read off row n of the table.
BigInt s_direct(const PolyTable& table, unsigned k, std::int64_t n);

// sum over a in A(i) of (i/a)^j (-1)^{i/a}; the value of the j-th delta
// power of p_{A,i} at t = -1, computed straight from the divisor set.
BigInt delta_p_at_minus_one(const SetSpec& spec, unsigned j, std::int64_t i);

struct SumTable {
    enum class Method { direct, recurrence };
    std::string spec;
    unsigned k_max = 0;
    std::int64_t n_max = 0;
    Method method = Method::direct;
    std::vector<std::vector<BigInt>> s; // s[k][n]

    const BigInt& at(unsigned k, std::int64_t n) const;
};

// Fills every row of the table from the partition polynomials.
SumTable sum_table_direct(const PolyTable& table, unsigned k_max);

// Independent computation path. Row k = 0 comes from the partition table
// (the lift below only raises k); every higher row is filled by
//   S_{k+1}(n) = sum_{i=1..n} sum_{j=0..k} C(k,j) * dp(j,i) * S_{k-j}(n-i)
// with dp(j,i) = delta_p_at_minus_one(spec, j, i), never touching the
// partition polynomials again. Exact agreement with sum_table_direct is the
// main cross-validation of the whole engine.
SumTable sum_table_recurrence(const SetSpec& spec, unsigned k_max, std::int64_t n_max);

// The k = 0 column S_{A,0}(n) = f_{A,n}(-1) for n = 0..N, computed by
// evaluating the product DP at t = -1 directly (g_n -= g_{n-a} per element).
// Same values as sum_table_direct row 0 at a fraction of the cost; used for
// long sign scans.
std::vector<BigInt> s0_series(const SetSpec& spec, std::int64_t n_max);

// One failed polynomial identity instance.
struct IdentityFailure {
    int identity = 0; // 1, 2 or 3
    std::int64_t n = 0;
    std::string lhs;
    std::string rhs;
};

// Exact polynomial identity check for 1 <= n <= N:
//   (1) sum_{i=1..n} p_{A,i} f_{A,n-i} = t f'_{A,n}
//   (2) sum_{i=1..n} q_{A,i} f_{A,n-i} = n f_{A,n}
//   (3) t q'_{A,n} = n p_{A,n}
// Failures are report content (first 10 per identity), not exceptions.
struct Lemma22Report {
    std::string spec;
    std::int64_t n_max = 0;
    std::int64_t checks_run = 0;
    std::vector<IdentityFailure> failures;
    std::int64_t failures_total = 0;
    bool ok() const { return failures_total == 0; }
};

Lemma22Report verify_divisor_identities(const SetSpec& spec, std::int64_t n_max);

// Exact binomial triangle C(0..k_max, *)
std::vector<std::vector<BigInt>> binomial_triangle(unsigned k_max);

} // namespace partsign
