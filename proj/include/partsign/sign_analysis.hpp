#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partsign/poly.hpp"
#include "partsign/weighted_sums.hpp"

namespace partsign {

// Ternary sign sequence of (S_{A,k}(n))_n. Zero is a first-class symbol:
// exact zeros occur (two-element sets at k = 0) and period detection treats
// them like any other letter.
struct SignSeq {
    std::string spec;
    unsigned k = 0;
    std::vector<std::int8_t> signs; // n = 0..N, values in {-1,0,+1}
};

SignSeq sign_sequence(const SumTable& table, unsigned k);

// Finite-window periodicity evidence. A candidate is never a proof; the
// window is recorded so the report says exactly what was checked.
struct PeriodReport {
    std::int64_t preperiod = 0;
    std::int64_t period = 0;
    std::int64_t window_lo = 0; // = preperiod
    std::int64_t window_hi = 0; // last index checked
    std::vector<std::string> divisibility_notes;
};

// Smallest period p <= max_period (ties broken by smallest preperiod) such
// that the suffix from the preperiod is p-periodic on the whole window. A
// candidate (q,p) is only admissible when the window shows at least two full
// periods past the preperiod (q + 2p <= length). Returns nullopt when no
// admissible candidate fits the caps; throws WindowTooShort when the window
// cannot validate any candidate at all. Sizing the window at least
// max_preperiod + 2*max_period keeps the whole search space admissible (the
// default caps N/4, N/4 do this).
std::optional<PeriodReport> detect_period(const std::vector<std::int8_t>& signs,
                                          std::int64_t max_preperiod,
                                          std::int64_t max_period);

inline std::optional<PeriodReport> detect_period(const SignSeq& seq,
                                                 std::int64_t max_preperiod,
                                                 std::int64_t max_period) {
    return detect_period(seq.signs, max_preperiod, max_period);
}

// Closed form of the n-th partition polynomial of a two-element set {a, b},
// 1 <= a < b, gcd(a,b) = 1: coefficient of t^j is 1 exactly when
// ceil(n/b) <= j <= floor(n/a) and a*j == n (mod b-a) (no congruence
// restriction when b-a = 1). Must match the DP row.
Poly two_element_poly(std::uint64_t a, std::uint64_t b, std::int64_t n);

// First n with (-1)^n S_{A,k}(n) < 0, or nullopt if the alternation claim
// holds on the table's window.
std::optional<std::int64_t> check_alternating(const SumTable& sums, unsigned k);

// First n >= n0 violating the strict period-4 pattern
// (-1)^{floor((n+1)/2)} S_{A,k}(n) > 0, or nullopt.
std::optional<std::int64_t> check_half_period_pattern(const SumTable& sums, unsigned k,
                                                      std::int64_t n0);

// Same scans over a plain value column (k is implied by the caller).
std::optional<std::int64_t> check_alternating(const std::vector<BigInt>& values);
std::optional<std::int64_t> check_half_period_pattern(const std::vector<BigInt>& values,
                                                      std::int64_t n0);

// Longest run of consecutive strictly positive / strictly negative values;
// evidence for the root-of-unity coordinate scans.
struct RunLengths {
    std::int64_t longest_positive = 0;
    std::int64_t longest_negative = 0;
};
RunLengths longest_sign_runs(const std::vector<std::int8_t>& signs);

} // namespace partsign
