#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partsign {

// Symbolic description of a part-set A of positive integers. Infinite sets
// are never materialized: every computation takes an explicit bound N and
// works on the truncation A ∩ [1,N], which is always a prefix of any larger
// truncation.
//
// Text grammar (used by config files and CLI flags):
//   explicit:1,2,6        finite set
//   range:1..8            {1,...,8}
//   ap:1+3k               {1+3j : j ≥ 0}
//   geom:2                {2^i : i ≥ 0}
//   fact:5 | fact:*       {i! : 1 ≤ i ≤ 5} | all factorials
//   odd                   {1,3,5,...}
//   all                   {1,2,3,...}
//   scaled(odd;p=j)       ∪_j 2^{p_j}·base with p_j = j; also p=j*s and
//                         explicit exponent lists p=0,2,5 (p_0 must be 0,
//                         base must be provably all-odd)
//   union(a|b|...)        disjoint union, checked on every truncated view
//
// Parsing and formatting are canonical: parse(to_string()) round-trips and a
// given string always yields the same enumeration.
class SetSpec {
public:
    // exponent sequence of a scaled union: p_j = j*stride, or an explicit
    // strictly increasing list starting at 0
    struct Exponents {
        std::vector<std::uint32_t> list; // used when stride == 0
        std::uint32_t stride = 0;        // p_j = j*stride when stride > 0
        bool is_stride() const { return stride > 0; }
    };

    static SetSpec explicit_set(std::vector<std::uint64_t> elems);
    static SetSpec range(std::uint64_t lo, std::uint64_t hi);
    static SetSpec arithmetic(std::uint64_t first, std::uint64_t step);
    static SetSpec geometric(std::uint64_t base);
    static SetSpec factorials(std::optional<std::uint32_t> limit);
    static SetSpec odd();
    static SetSpec all();
    static SetSpec scaled_union(SetSpec base, Exponents exps);
    static SetSpec union_of(std::vector<SetSpec> parts);

    static SetSpec parse(std::string_view text);
    std::string to_string() const;

    // A ∩ [1,N], strictly increasing. Throws SpecError if a union member
    // overlaps another on this view.
    std::vector<std::uint64_t> enumerate_upto(std::uint64_t n_max) const;

    bool contains(std::uint64_t x) const;

    // {d ∈ A : d | n}, increasing. A(n) in the reports.
    std::vector<std::uint64_t> divisors_in(std::uint64_t n) const;

    // conservative: true only when every element is provably odd
    bool provably_all_odd() const;

    // smallest element of the truncated view, if any
    std::optional<std::uint64_t> min_element_upto(std::uint64_t n_max) const;

    bool operator==(const SetSpec& o) const { return to_string() == o.to_string(); }

private:
    struct Node;
    explicit SetSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// true iff the truncated views up to N are pairwise disjoint
bool validate_disjoint(const std::vector<SetSpec>& specs, std::uint64_t n_max);

} // namespace partsign
