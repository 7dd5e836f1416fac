#include "partsign/sign_analysis.hpp"

#include <numeric>
#include <stdexcept>

#include "partsign/errors.hpp"

namespace partsign {

SignSeq sign_sequence(const SumTable& table, unsigned k) {
    if (k > table.k_max) throw std::out_of_range("sign_sequence: k outside table");
    SignSeq seq;
    seq.spec = table.spec;
    seq.k = k;
    seq.signs.reserve(table.s[k].size());
    for (const BigInt& v : table.s[k]) seq.signs.push_back(static_cast<std::int8_t>(sign_of(v)));
    return seq;
}

std::optional<PeriodReport> detect_period(const std::vector<std::int8_t>& signs,
                                          std::int64_t max_preperiod,
                                          std::int64_t max_period) {
    const std::int64_t len = static_cast<std::int64_t>(signs.size());
    if (len < 2) throw WindowTooShort("period detection needs at least 2 observed signs");
    if (max_period < 1 || max_preperiod < 0)
        throw std::invalid_argument("detect_period: bad search bounds");

    for (std::int64_t p = 1; p <= max_period; ++p) {
        if (2 * p > len) break; // shorter windows cannot show two full periods
        // minimal preperiod for this p: one past the last mismatch
        std::int64_t q = 0;
        for (std::int64_t n = len - p - 1; n >= 0; --n) {
            if (signs[static_cast<std::size_t>(n)] != signs[static_cast<std::size_t>(n + p)]) {
                q = n + 1;
                break;
            }
        }
        if (q > max_preperiod || q + 2 * p > len) continue;
        PeriodReport r;
        r.preperiod = q;
        r.period = p;
        r.window_lo = q;
        r.window_hi = len - 1;
        return r;
    }
    return std::nullopt;
}

Poly two_element_poly(std::uint64_t a, std::uint64_t b, std::int64_t n) {
    if (!(1 <= a && a < b)) throw std::invalid_argument("two_element_poly: need 1 <= a < b");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("two_element_poly: need gcd(a,b) = 1");
    if (n < 0) throw std::invalid_argument("two_element_poly: negative n");

    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t d = b - a;
    const std::uint64_t j_lo = (un + b - 1) / b; // ceil(n/b)
    const std::uint64_t j_hi = un / a;
    Poly out;
    if (j_lo > j_hi) return out;

    std::uint64_t j_first = j_lo;
    std::uint64_t step = 1;
    if (d > 1) {
        // solve a*j == n (mod d); the inverse exists since gcd(a,d) = gcd(a,b) = 1
        std::int64_t inv = 1, t = 0, r0 = static_cast<std::int64_t>(d),
                     r1 = static_cast<std::int64_t>(a % d);
        // extended Euclid on (d, a mod d)
        std::int64_t s0 = 0, s1 = 1;
        while (r1 != 0) {
            const std::int64_t quo = r0 / r1;
            r0 -= quo * r1;
            std::swap(r0, r1);
            s0 -= quo * s1;
            std::swap(s0, s1);
        }
        t = s0 % static_cast<std::int64_t>(d);
        if (t < 0) t += static_cast<std::int64_t>(d);
        inv = t;
        const std::uint64_t r = (static_cast<std::uint64_t>(inv) * (un % d)) % d;
        j_first = j_lo + (r + d - j_lo % d) % d;
        step = d;
        if (j_first > j_hi) return out;
    }
    for (std::uint64_t j = j_first; j <= j_hi; j += step) out.mutable_coeff(j) = 1;
    out.trim();
    return out;
}

std::optional<std::int64_t> check_alternating(const std::vector<BigInt>& values) {
    for (std::size_t n = 0; n < values.size(); ++n) {
        const int s = sign_of(values[n]);
        if ((n & 1) ? s > 0 : s < 0) return static_cast<std::int64_t>(n);
    }
    return std::nullopt;
}

std::optional<std::int64_t> check_alternating(const SumTable& sums, unsigned k) {
    if (k > sums.k_max) throw std::out_of_range("check_alternating: k outside table");
    return check_alternating(sums.s[k]);
}

std::optional<std::int64_t> check_half_period_pattern(const std::vector<BigInt>& values,
                                                      std::int64_t n0) {
    for (std::size_t n = static_cast<std::size_t>(std::max<std::int64_t>(n0, 0));
         n < values.size(); ++n) {
        const int s = sign_of(values[n]);
        const int want = (((n + 1) / 2) & 1) ? -1 : 1; // sign of (-1)^{floor((n+1)/2)}
        if (s != want) return static_cast<std::int64_t>(n);
    }
    return std::nullopt;
}

std::optional<std::int64_t> check_half_period_pattern(const SumTable& sums, unsigned k,
                                                      std::int64_t n0) {
    if (k > sums.k_max) throw std::out_of_range("check_half_period_pattern: k outside table");
    return check_half_period_pattern(sums.s[k], n0);
}

RunLengths longest_sign_runs(const std::vector<std::int8_t>& signs) {
    RunLengths out;
    std::int64_t run = 0;
    std::int8_t prev = 0;
    for (std::int8_t s : signs) {
        run = (s != 0 && s == prev) ? run + 1 : (s != 0 ? 1 : 0);
        prev = s;
        if (s > 0) out.longest_positive = std::max(out.longest_positive, run);
        if (s < 0) out.longest_negative = std::max(out.longest_negative, run);
    }
    return out;
}

} // namespace partsign
