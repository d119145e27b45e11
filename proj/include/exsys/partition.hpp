#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exsys {

// Strictly descending exponents of a basis wedge x^{e1} ∧ x^{e2} ∧ ... (degree = size).
using WedgeKey = boost::container::small_vector<int, 6>;

// Optional rank bound: x^k vanishes for k >= n. Empty means unbounded.
struct RankBound {
    std::optional<int> n;

    static RankBound unbounded() { return {}; }
    static RankBound of(int n) { return {n}; }
    bool kills(int exponent) const { return n && exponent >= *n; }
    friend bool operator==(const RankBound&, const RankBound&) = default;
};

class Partition {
public:
    Partition() = default;
    // Throws if parts are negative or not weakly decreasing; trailing zeros are trimmed.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    // λ_i with 1-based i, zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// (r-1+λ₁, r-2+λ₂, ..., λ_r)
WedgeKey exponent_tuple(int r, const Partition& lambda);

// Inverse of exponent_tuple on a strictly descending key.
Partition key_partition(const WedgeKey& key);

enum class Orientation { positive, negative, zero };

struct CanonicalTuple {
    Orientation orientation = Orientation::zero;
    int degree = 0;
    Partition partition;
    WedgeKey key;  // descending exponents, empty when orientation is zero
};

CanonicalTuple canonicalize_tuple(const std::vector<int>& tuple);

// Sorts in place to strictly descending order; returns +1/-1 for the permutation parity, 0 on a repeat.
int sort_descending_with_sign(WedgeKey& key);

// Pieri rule: μ ⊇ λ interlacing with |μ| = |λ| + i, at most r parts, μ₁ ≤ n - r when bounded.
std::vector<Partition> pieri(const Partition& lambda, int i, int r, RankBound bound = {});

bool interlaces(const Partition& mu, const Partition& lambda, int r);

// e₁^{i₁}⋯e_r^{i_r} ↦ conjugate of (1^{i₁} 2^{i₂} ⋯ r^{i_r})
Partition monomial_to_partition(const std::vector<int>& exponents);

// All partitions of the given weight with at most max_parts parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_parts);
// All partitions of weight <= max_weight with at most max_parts parts.
std::vector<Partition> partitions_up_to(int max_weight, int max_parts);

// "3,2,1"; the empty partition prints as "0".
std::string format_partition(const Partition& lambda);
Partition parse_partition(std::string_view text);

}  // namespace exsys
