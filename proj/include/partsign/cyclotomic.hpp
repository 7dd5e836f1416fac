#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partsign/partition.hpp"
#include "partsign/poly.hpp"

namespace partsign {

unsigned euler_phi(unsigned d);

// Guard: quadratic reduction cost is negligible up to here and nothing in
// the verification suites needs more.
inline constexpr unsigned kMaxCyclotomicOrder = 64;

// d-th cyclotomic polynomial, exact coefficients, by iterated exact division
// of x^d - 1 by the cyclotomic polynomials of the proper divisors of d.
Poly cyclotomic_poly(unsigned d);

// Element of Z[zeta_d] in the power basis zeta^0..zeta^{phi(d)-1}.
// For d = 2 this degenerates to a single integer, consistent with
// evaluation at -1.
struct CycloValue {
    unsigned d = 2;
    std::vector<BigInt> coords; // size phi(d)

    bool is_zero() const;
    bool operator==(const CycloValue& o) const { return d == o.d && coords == o.coords; }
    std::string to_string() const;
};

// Canonical reduction of the polynomial modulo the d-th cyclotomic
// polynomial (monic, so long division stays exact). 2 <= d <= 64.
CycloValue eval_at_root(const Poly& poly, unsigned d);

// Rows n = 0..N of the coordinates of delta^k(f_{A,n}) at the primitive
// d-th root of unity. Coordinate i over n feeds the sign machinery.
struct UTable {
    std::string spec;
    unsigned k = 0;
    unsigned d = 2;
    std::vector<CycloValue> rows;

    std::vector<std::int8_t> coordinate_signs(unsigned i) const;
    std::vector<BigInt> coordinate_values(unsigned i) const;
};

UTable u_table(const PolyTable& table, unsigned k, unsigned d);

// For A = {2^i}: the partition polynomial of every m == 4 (mod 8) must
// vanish identically at the primitive 4th root of unity.
struct Zeta4Report {
    std::int64_t bound = 0;
    std::int64_t checks_run = 0;
    std::vector<std::int64_t> failures; // offending m values
    bool ok() const { return failures.empty(); }
};

Zeta4Report check_zeta4_vanishing(std::int64_t n_max);

} // namespace partsign
