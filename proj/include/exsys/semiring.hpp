#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exsys {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// A commutative semiring with a decision procedure for b + c = b'.
template <class S>
concept Semiring = requires(const typename S::value_type& a, const typename S::value_type& b,
                            std::string_view text) {
    typename S::value_type;
    { S::id } -> std::convertible_to<std::string_view>;
    { S::idempotent_add } -> std::convertible_to<bool>;
    { S::zero() } -> std::same_as<typename S::value_type>;
    { S::one() } -> std::same_as<typename S::value_type>;
    { S::add(a, b) } -> std::same_as<typename S::value_type>;
    { S::mul(a, b) } -> std::same_as<typename S::value_type>;
    { S::eq(a, b) } -> std::same_as<bool>;
    { S::solve_add(a, b) } -> std::same_as<std::optional<typename S::value_type>>;
    { S::from_int(1) } -> std::same_as<typename S::value_type>;
    { S::parse(text) } -> std::same_as<typename S::value_type>;
    { S::format(a) } -> std::same_as<std::string>;
};

struct Nat {
    using value_type = BigInt;
    static constexpr std::string_view id = "nat";
    static constexpr bool idempotent_add = false;

    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static std::optional<value_type> solve_add(const value_type& b, const value_type& target) {
        if (target < b) return std::nullopt;
        return value_type(target - b);
    }
    static value_type from_int(long long v) {
        if (v < 0) throw std::domain_error("negative value in nat");
        return v;
    }
    static value_type parse(std::string_view text);
    static std::string format(const value_type& a) { return a.str(); }
};

struct QPlus {
    using value_type = BigRational;
    static constexpr std::string_view id = "qplus";
    static constexpr bool idempotent_add = false;

    static value_type zero() { return 0; }
    static value_type one() { return 1; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static std::optional<value_type> solve_add(const value_type& b, const value_type& target) {
        if (target < b) return std::nullopt;
        return value_type(target - b);
    }
    static value_type from_int(long long v) {
        if (v < 0) throw std::domain_error("negative value in qplus");
        return v;
    }
    static value_type from_ratio(long long num, long long den) {
        if (den <= 0 || num < 0) throw std::domain_error("bad nonnegative rational");
        return value_type(num, den);
    }
    static value_type parse(std::string_view text);
    static std::string format(const value_type& a) { return a.str(); }
};

// Extended integer for max-plus: finite value or -inf.
struct Tropical {
    bool neg_inf = true;
    BigInt value = 0;

    static Tropical minus_infinity() { return {}; }
    static Tropical finite(BigInt v) { return {false, std::move(v)}; }
    friend bool operator==(const Tropical& a, const Tropical& b) {
        if (a.neg_inf || b.neg_inf) return a.neg_inf == b.neg_inf;
        return a.value == b.value;
    }
    friend bool operator<(const Tropical& a, const Tropical& b) {
        if (b.neg_inf) return false;
        if (a.neg_inf) return true;
        return a.value < b.value;
    }
};

struct MaxPlus {
    using value_type = Tropical;
    static constexpr std::string_view id = "maxplus";
    static constexpr bool idempotent_add = true;

    static value_type zero() { return Tropical::minus_infinity(); }
    static value_type one() { return Tropical::finite(0); }
    static value_type add(const value_type& a, const value_type& b) { return a < b ? b : a; }
    static value_type mul(const value_type& a, const value_type& b) {
        if (a.neg_inf || b.neg_inf) return zero();
        return Tropical::finite(a.value + b.value);
    }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    // max(b, c) = target has solutions iff b <= target; the largest one is target itself.
    static std::optional<value_type> solve_add(const value_type& b, const value_type& target) {
        if (target < b) return std::nullopt;
        return target;
    }
    // Integers n embed as the n-fold sum of one, which is one again; only 0 and 1 are meaningful.
    static value_type from_int(long long v) {
        if (v < 0) throw std::domain_error("negative multiplicity in maxplus");
        return v == 0 ? zero() : one();
    }
    static value_type parse(std::string_view text);
    static std::string format(const value_type& a) { return a.neg_inf ? "-inf" : a.value.str(); }
};

static_assert(Semiring<Nat> && Semiring<QPlus> && Semiring<MaxPlus>);

// Element (pos, neg) of the symmetrized semiring; negation is the switch.
template <Semiring S>
struct Pair {
    using value_type = typename S::value_type;
    value_type pos = S::zero();
    value_type neg = S::zero();

    static Pair zero() { return {S::zero(), S::zero()}; }
    static Pair one() { return {S::one(), S::zero()}; }
    static Pair minus_one() { return {S::zero(), S::one()}; }
    static Pair tangible(value_type a) { return {std::move(a), S::zero()}; }
    static Pair balanced(const value_type& a) { return {a, a}; }
    static Pair sign(int s) { return s >= 0 ? one() : minus_one(); }

    bool is_zero() const { return S::eq(pos, S::zero()) && S::eq(neg, S::zero()); }
    bool is_quasi_zero() const { return S::eq(pos, neg); }
    bool is_tangible() const {
        return !is_zero() && (S::eq(pos, S::zero()) || S::eq(neg, S::zero()));
    }

    friend bool operator==(const Pair& a, const Pair& b) {
        return S::eq(a.pos, b.pos) && S::eq(a.neg, b.neg);
    }
};

template <Semiring S>
Pair<S> pair_add(const Pair<S>& p, const Pair<S>& q) {
    return {S::add(p.pos, q.pos), S::add(p.neg, q.neg)};
}

template <Semiring S>
Pair<S> pair_negate(const Pair<S>& p) {
    return {p.neg, p.pos};
}

template <Semiring S>
Pair<S> pair_mul(const Pair<S>& p, const Pair<S>& q) {
    return {S::add(S::mul(p.pos, q.pos), S::mul(p.neg, q.neg)),
            S::add(S::mul(p.pos, q.neg), S::mul(p.neg, q.pos))};
}

// p (-) q
template <Semiring S>
Pair<S> pair_sub(const Pair<S>& p, const Pair<S>& q) {
    return pair_add(p, pair_negate(q));
}

// Decides p ⪯₀ q: exists c with q.pos = p.pos + c and q.neg = p.neg + c.
template <Semiring S>
bool pair_surpasses(const Pair<S>& p, const Pair<S>& q) {
    auto fits = [&](const typename S::value_type& c) {
        return S::eq(S::add(p.pos, c), q.pos) && S::eq(S::add(p.neg, c), q.neg);
    };
    auto c_pos = S::solve_add(p.pos, q.pos);
    auto c_neg = S::solve_add(p.neg, q.neg);
    if (!c_pos || !c_neg) return false;
    if constexpr (!S::idempotent_add) {
        return S::eq(*c_pos, *c_neg);
    } else {
        // Each solution set is a down-interval (or a single point); one of these lies in the
        // intersection whenever it is non-empty.
        for (const auto& c : {*c_pos, *c_neg, q.pos, q.neg, S::zero()})
            if (fits(c)) return true;
        return false;
    }
}

// The tangible representative of p modulo quasi-zeros, when one exists.
template <Semiring S>
Pair<S> tangible_part(const Pair<S>& p) {
    if (p.is_quasi_zero()) return Pair<S>::zero();
    if (auto d = S::solve_add(p.neg, p.pos)) return Pair<S>::tangible(*d);
    if (auto d = S::solve_add(p.pos, p.neg)) return {S::zero(), *d};
    return p;
}

// Cancels the balanced part of p; meaningful only for cancellative semirings.
template <Semiring S>
Pair<S> cancel_balanced(const Pair<S>& p) {
    static_assert(!S::idempotent_add, "balanced cancellation is undefined for idempotent addition");
    if (p.neg < p.pos) return {p.pos - p.neg, S::zero()};
    return {S::zero(), p.neg - p.pos};
}

template <Semiring S>
std::string format_pair(const Pair<S>& p) {
    return "[" + S::format(p.pos) + "," + S::format(p.neg) + "]";
}

struct SemiringInfo {
    std::string id;
    std::string description;
    bool idempotent_add;
};

std::vector<SemiringInfo> builtin_semirings();

// Calls f(S{}) with the builtin semiring named by id.
template <class F>
decltype(auto) with_semiring(std::string_view id, F&& f) {
    if (id == Nat::id) return std::forward<F>(f)(Nat{});
    if (id == QPlus::id) return std::forward<F>(f)(QPlus{});
    if (id == MaxPlus::id) return std::forward<F>(f)(MaxPlus{});
    throw std::invalid_argument("unknown semiring '" + std::string(id) + "'");
}

}  // namespace exsys
