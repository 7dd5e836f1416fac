#pragma once

#include <cstdint>
#include <vector>

#include "partsign/poly.hpp"
#include "partsign/set_spec.hpp"

namespace partsign {

// Table of the partition polynomials of a set: row n collects, as the
// coefficient of t^i, the number of ways to write n as an unordered sum of
// exactly i elements of A. Row 0 is the constant 1 (empty partition),
// row n evaluated at 1 is the plain partition count of n.
struct PolyTable {
    std::string spec;                    // canonical spec string
    std::int64_t bound = 0;              // N
    std::vector<std::uint64_t> elements; // the truncated view A ∩ [1,N] used
    std::vector<Poly> rows;              // rows 0..N

    const Poly& row(std::int64_t n) const;
    // c_A(i,n): coefficient of t^i in row n, 0 beyond the row degree
    const BigInt& count_parts(std::int64_t i, std::int64_t n) const;
};

// Product DP: starting from the empty-set table (row 0 = 1), every element
// a of the truncation folds in as f_n += t * f_{n-a} for n = a..N, which
// realizes division by (1 - t x^a). The result does not depend on the order
// in which elements are processed.
PolyTable partition_table(const SetSpec& spec, std::int64_t n_max);

inline constexpr std::int64_t kDefaultBruteForceCap = 60;

// Definition-level oracle: enumerates all multisets of elements of
// A ∩ [1,n] summing to n by recursive descent with non-increasing parts and
// returns counts indexed by number of parts (size n+1). Exponential; guarded
// by the cap (BoundExceeded beyond it).
std::vector<BigInt> brute_force_counts(const SetSpec& spec, std::int64_t n,
                                       std::int64_t cap = kDefaultBruteForceCap);

} // namespace partsign
