#include "partsign/partition.hpp"

#include <stdexcept>

#include "partsign/errors.hpp"

namespace partsign {

namespace {
const BigInt kZero = 0;
}

const Poly& PolyTable::row(std::int64_t n) const {
    if (n < 0 || n > bound)
        throw std::out_of_range("row " + std::to_string(n) + " outside table bound " +
                                std::to_string(bound));
    return rows[static_cast<std::size_t>(n)];
}

const BigInt& PolyTable::count_parts(std::int64_t i, std::int64_t n) const {
    const Poly& r = row(n);
    if (i < 0 || i > r.degree()) return kZero;
    return r.coeff(static_cast<std::size_t>(i));
}

PolyTable partition_table(const SetSpec& spec, std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("partition_table: negative bound");
    PolyTable t;
    t.spec = spec.to_string();
    t.bound = n_max;
    t.elements = spec.enumerate_upto(static_cast<std::uint64_t>(n_max));
    t.rows.assign(static_cast<std::size_t>(n_max) + 1, Poly{});
    t.rows[0] = Poly::constant(1);
    for (std::uint64_t a : t.elements) {
        for (std::size_t n = static_cast<std::size_t>(a); n <= static_cast<std::size_t>(n_max); ++n)
            t.rows[n].add_shifted(t.rows[n - a], 1);
    }
    for (auto& r : t.rows) r.trim();
    return t;
}

namespace {

void descend(const std::vector<std::uint64_t>& elems, std::uint64_t remaining,
             std::size_t max_idx, std::size_t parts, std::vector<BigInt>& counts) {
    if (remaining == 0) {
        counts[parts] += 1;
        return;
    }
    // parts are chosen non-increasing: indices 0..max_idx still allowed
    for (std::size_t idx = 0; idx <= max_idx && idx < elems.size(); ++idx) {
        if (elems[idx] > remaining) break;
        descend(elems, remaining - elems[idx], idx, parts + 1, counts);
    }
}

} // namespace

std::vector<BigInt> brute_force_counts(const SetSpec& spec, std::int64_t n, std::int64_t cap) {
    if (n < 0) throw std::invalid_argument("brute_force_counts: negative n");
    if (n > cap)
        throw BoundExceeded("brute-force enumeration capped at n <= " + std::to_string(cap) +
                            " (asked for " + std::to_string(n) + ")");
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
    const auto elems = spec.enumerate_upto(static_cast<std::uint64_t>(n));
    if (n == 0) {
        counts[0] = 1; // the empty partition
        return counts;
    }
    if (!elems.empty())
        descend(elems, static_cast<std::uint64_t>(n), elems.size() - 1, 0, counts);
    return counts;
}

} // namespace partsign
