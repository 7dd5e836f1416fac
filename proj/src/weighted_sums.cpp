#include "partsign/weighted_sums.hpp"

#include <stdexcept>

namespace partsign {

std::pair<Poly, Poly> divisor_polys(const SetSpec& spec, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisor_polys: n must be >= 1");
    Poly p, q;
    for (std::uint64_t a : spec.divisors_in(static_cast<std::uint64_t>(n))) {
        const std::size_t e = static_cast<std::size_t>(n) / a;
        p.mutable_coeff(e) += 1;
        q.mutable_coeff(e) += a;
    }
    p.trim();
    q.trim();
    return {std::move(p), std::move(q)};
}

BigInt s_direct(const PolyTable& table, unsigned k, std::int64_t n) {
    return table.row(n).delta_pow(k).eval_at_minus_one();
}

BigInt delta_p_at_minus_one(const SetSpec& spec, unsigned j, std::int64_t i) {
    if (i < 1) throw std::invalid_argument("delta_p_at_minus_one: i must be >= 1");
    BigInt acc = 0;
    for (std::uint64_t a : spec.divisors_in(static_cast<std::uint64_t>(i))) {
        const std::uint64_t e = static_cast<std::uint64_t>(i) / a;
        const BigInt term = int_pow(BigInt(e), j);
        if (e & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

const BigInt& SumTable::at(unsigned k, std::int64_t n) const {
    if (k > k_max || n < 0 || n > n_max)
        throw std::out_of_range("SumTable::at(" + std::to_string(k) + "," + std::to_string(n) +
                                ") outside bounds");
    return s[k][static_cast<std::size_t>(n)];
}

SumTable sum_table_direct(const PolyTable& table, unsigned k_max) {
    SumTable t;
    t.spec = table.spec;
    t.k_max = k_max;
    t.n_max = table.bound;
    t.method = SumTable::Method::direct;
    t.s.assign(k_max + 1, std::vector<BigInt>(static_cast<std::size_t>(table.bound) + 1));
    // one pass per row: accumulate (-1)^i i^k c_i for every k at once
    for (std::int64_t n = 0; n <= table.bound; ++n) {
        const auto& coeffs = table.row(n).coeffs();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            BigInt term = (i & 1) ? -coeffs[i] : coeffs[i];
            for (unsigned k = 0; k <= k_max; ++k) {
                if (k > 0) term *= static_cast<std::uint64_t>(i); // dead for i=0: 0^k term
                if (k > 0 && i == 0) break;                       // only k=0 sees 0^0 = 1
                t.s[k][static_cast<std::size_t>(n)] += term;
            }
        }
    }
    return t;
}

std::vector<BigInt> s0_series(const SetSpec& spec, std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("s0_series: negative bound");
    std::vector<BigInt> g(static_cast<std::size_t>(n_max) + 1, BigInt(0));
    g[0] = 1;
    // the product DP mapped through t = -1: each element contributes
    // g_n -= g_{n-a}
    for (std::uint64_t a : spec.enumerate_upto(static_cast<std::uint64_t>(n_max)))
        for (std::size_t n = static_cast<std::size_t>(a); n < g.size(); ++n)
            g[n] -= g[n - a];
    return g;
}

SumTable sum_table_recurrence(const SetSpec& spec, unsigned k_max, std::int64_t n_max) {
    SumTable t;
    t.spec = spec.to_string();
    t.k_max = k_max;
    t.n_max = n_max;
    t.method = SumTable::Method::recurrence;
    const std::size_t width = static_cast<std::size_t>(n_max) + 1;
    t.s.assign(k_max + 1, std::vector<BigInt>(width));

    // base row k = 0 from the partition polynomials; the lift below never
    // touches them again
    {
        const PolyTable base = partition_table(spec, n_max);
        for (std::int64_t n = 0; n <= n_max; ++n)
            t.s[0][static_cast<std::size_t>(n)] = s_direct(base, 0, n);
    }
    if (k_max == 0) return t;

    // dp[j][i] = value of the j-th delta power of the divisor polynomial of
    // i at t = -1
    std::vector<std::vector<BigInt>> dp(k_max, std::vector<BigInt>(width));
    for (unsigned j = 0; j < k_max; ++j)
        for (std::int64_t i = 1; i <= n_max; ++i)
            dp[j][static_cast<std::size_t>(i)] = delta_p_at_minus_one(spec, j, i);

    const auto binom = binomial_triangle(k_max);
    for (unsigned k = 0; k + 1 <= k_max; ++k) {
        for (std::int64_t n = 0; n <= n_max; ++n) {
            BigInt acc = 0;
            for (std::int64_t i = 1; i <= n; ++i) {
                for (unsigned j = 0; j <= k; ++j) {
                    const BigInt& d = dp[j][static_cast<std::size_t>(i)];
                    if (d.is_zero()) continue;
                    acc += binom[k][j] * d * t.s[k - j][static_cast<std::size_t>(n - i)];
                }
            }
            t.s[k + 1][static_cast<std::size_t>(n)] = std::move(acc);
        }
    }
    return t;
}

std::vector<std::vector<BigInt>> binomial_triangle(unsigned k_max) {
    std::vector<std::vector<BigInt>> c(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) {
        c[k].assign(k + 1, BigInt(1));
        for (unsigned j = 1; j < k; ++j) c[k][j] = c[k - 1][j - 1] + c[k - 1][j];
    }
    return c;
}

Lemma22Report verify_divisor_identities(const SetSpec& spec, std::int64_t n_max) {
    constexpr std::size_t kMaxFailuresPerIdentity = 10;
    Lemma22Report report;
    report.spec = spec.to_string();
    report.n_max = n_max;

    const PolyTable table = partition_table(spec, n_max);
    std::vector<Poly> ps(static_cast<std::size_t>(n_max) + 1);
    std::vector<Poly> qs(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t i = 1; i <= n_max; ++i) {
        auto [p, q] = divisor_polys(spec, i);
        ps[static_cast<std::size_t>(i)] = std::move(p);
        qs[static_cast<std::size_t>(i)] = std::move(q);
    }

    std::size_t fail_count[4] = {0, 0, 0, 0};
    auto record = [&](int identity, std::int64_t n, const Poly& lhs, const Poly& rhs) {
        ++report.failures_total;
        if (fail_count[identity]++ < kMaxFailuresPerIdentity)
            report.failures.push_back({identity, n, lhs.to_string(), rhs.to_string()});
    };

    for (std::int64_t n = 1; n <= n_max; ++n) {
        Poly conv_p, conv_q;
        for (std::int64_t i = 1; i <= n; ++i) {
            const Poly& f = table.row(n - i);
            if (f.is_zero()) continue;
            conv_p += ps[static_cast<std::size_t>(i)] * f;
            conv_q += qs[static_cast<std::size_t>(i)] * f;
        }
        const Poly& fn = table.row(n);
        const Poly delta_f = fn.delta_pow(1);
        if (!(conv_p == delta_f)) record(1, n, conv_p, delta_f);
        const Poly n_f = fn * BigInt(n);
        if (!(conv_q == n_f)) record(2, n, conv_q, n_f);
        const Poly tq = qs[static_cast<std::size_t>(n)].delta_pow(1);
        const Poly np = ps[static_cast<std::size_t>(n)] * BigInt(n);
        if (!(tq == np)) record(3, n, tq, np);
        report.checks_run += 3;
    }
    return report;
}

} // namespace partsign
