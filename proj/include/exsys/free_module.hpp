#pragma once

#include "exsys/semiring.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exsys {

// Finitely supported map K -> Pair<S>, kept sorted by key with no zero coefficients.
template <class K, Semiring S>
class FreeElement {
public:
    using key_type = K;
    using coeff_type = Pair<S>;
    using term_type = std::pair<K, Pair<S>>;

    FreeElement() = default;

    static FreeElement basis(K key, Pair<S> c = Pair<S>::one()) {
        FreeElement e;
        if (!c.is_zero()) e.terms_.emplace_back(std::move(key), std::move(c));
        return e;
    }

    // Builds from arbitrary terms: sorts, merges equal keys, drops zeros.
    static FreeElement from_terms(std::vector<term_type> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const term_type& a, const term_type& b) { return a.first < b.first; });
        FreeElement e;
        e.terms_.reserve(raw.size());
        for (auto& t : raw) {
            if (!e.terms_.empty() && e.terms_.back().first == t.first)
                e.terms_.back().second = pair_add(e.terms_.back().second, t.second);
            else
                e.terms_.push_back(std::move(t));
        }
        std::erase_if(e.terms_, [](const term_type& t) { return t.second.is_zero(); });
        return e;
    }

    const std::vector<term_type>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Pair<S> coeff(const K& key) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const term_type& t, const K& k) { return t.first < k; });
        if (it != terms_.end() && it->first == key) return it->second;
        return Pair<S>::zero();
    }

    friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

    friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
        FreeElement out;
        out.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                out.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                out.terms_.push_back(*j++);
            } else {
                auto c = pair_add(i->second, j->second);
                if (!c.is_zero()) out.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    FreeElement& operator+=(const FreeElement& other) { return *this = *this + other; }

    // Keywise map of coefficients; zero results are dropped.
    template <class F>
    FreeElement map_coeffs(F&& f) const {
        FreeElement out;
        out.terms_.reserve(terms_.size());
        for (const auto& [k, c] : terms_) {
            auto d = f(c);
            if (!d.is_zero()) out.terms_.emplace_back(k, std::move(d));
        }
        return out;
    }

    // Keywise map of keys that preserves the key order.
    template <class K2, class F>
    FreeElement<K2, S> map_keys_monotone(F&& f) const {
        std::vector<std::pair<K2, Pair<S>>> raw;
        raw.reserve(terms_.size());
        for (const auto& [k, c] : terms_) raw.emplace_back(f(k), c);
        return FreeElement<K2, S>::from_sorted_unchecked(std::move(raw));
    }

    static FreeElement from_sorted_unchecked(std::vector<term_type> sorted) {
        FreeElement e;
        e.terms_ = std::move(sorted);
        return e;
    }

private:
    std::vector<term_type> terms_;
};

template <class K, Semiring S>
FreeElement<K, S> fe_negate(const FreeElement<K, S>& v) {
    return v.map_coeffs([](const Pair<S>& c) { return pair_negate(c); });
}

template <class K, Semiring S>
FreeElement<K, S> fe_scale(const Pair<S>& a, const FreeElement<K, S>& v) {
    return v.map_coeffs([&](const Pair<S>& c) { return pair_mul(a, c); });
}

// u (-) v
template <class K, Semiring S>
FreeElement<K, S> fe_sub(const FreeElement<K, S>& u, const FreeElement<K, S>& v) {
    return u + fe_negate(v);
}

// Every coefficient is a quasi-zero.
template <class K, Semiring S>
bool fe_is_balanced(const FreeElement<K, S>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& t) { return t.second.is_quasi_zero(); });
}

// Returns the first key (in key order) where u ⪯₀ v fails, or null.
template <class K, Semiring S>
const K* first_surpass_failure(const FreeElement<K, S>& u, const FreeElement<K, S>& v) {
    const auto zero = Pair<S>::zero();
    auto i = u.begin();
    auto j = v.begin();
    while (i != u.end() || j != v.end()) {
        if (j == v.end() || (i != u.end() && i->first < j->first)) {
            if (!pair_surpasses(i->second, zero)) return &i->first;
            ++i;
        } else if (i == u.end() || j->first < i->first) {
            if (!pair_surpasses(zero, j->second)) return &j->first;
            ++j;
        } else {
            if (!pair_surpasses(i->second, j->second)) return &i->first;
            ++i;
            ++j;
        }
    }
    return nullptr;
}

// u ⪯₀ v, decided keywise.
template <class K, Semiring S>
bool fe_surpasses(const FreeElement<K, S>& u, const FreeElement<K, S>& v) {
    return first_surpass_failure(u, v) == nullptr;
}

template <class K, Semiring S>
bool fe_mutually_surpass(const FreeElement<K, S>& u, const FreeElement<K, S>& v) {
    return fe_surpasses(u, v) && fe_surpasses(v, u);
}

// Drops balanced coefficients and reduces the rest to tangible form.
template <class K, Semiring S>
FreeElement<K, S> fe_tangible_part(const FreeElement<K, S>& v) {
    return v.map_coeffs([](const Pair<S>& c) { return tangible_part(c); });
}

// Type-2 normalization (p, n) -> (p - m, n - m), m = min(p, n).
template <class K, Semiring S>
FreeElement<K, S> fe_cancel_balanced(const FreeElement<K, S>& v) {
    if constexpr (S::idempotent_add) {
        throw std::domain_error("type-2 normalization needs a cancellative semiring");
    } else {
        return v.map_coeffs([](const Pair<S>& c) { return cancel_balanced(c); });
    }
}

// Square matrix over pair coefficients.
template <Semiring S>
class EndoMatrix {
public:
    explicit EndoMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Pair<S>::zero()) {
        if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
    }

    static EndoMatrix identity(std::size_t dim) {
        EndoMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = Pair<S>::one();
        return m;
    }

    // Matrix unit E_{ij} (0-based).
    static EndoMatrix unit(std::size_t dim, std::size_t i, std::size_t j) {
        EndoMatrix m(dim);
        m(i, j) = Pair<S>::one();
        return m;
    }

    std::size_t dim() const { return dim_; }
    Pair<S>& operator()(std::size_t i, std::size_t j) { return entries_.at(i * dim_ + j); }
    const Pair<S>& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }
    const std::vector<Pair<S>>& entries() const { return entries_; }

    friend bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_;
    std::vector<Pair<S>> entries_;
};

namespace detail {
template <Semiring S>
void require_same_dim(const EndoMatrix<S>& a, const EndoMatrix<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}
}  // namespace detail

template <Semiring S>
EndoMatrix<S> mat_add(const EndoMatrix<S>& a, const EndoMatrix<S>& b) {
    detail::require_same_dim(a, b);
    EndoMatrix<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = pair_add(a(i, j), b(i, j));
    return out;
}

template <Semiring S>
EndoMatrix<S> mat_negate(const EndoMatrix<S>& a) {
    EndoMatrix<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = pair_negate(a(i, j));
    return out;
}

template <Semiring S>
EndoMatrix<S> mat_mul(const EndoMatrix<S>& a, const EndoMatrix<S>& b) {
    detail::require_same_dim(a, b);
    const auto n = a.dim();
    EndoMatrix<S> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto acc = Pair<S>::zero();
            for (std::size_t k = 0; k < n; ++k) acc = pair_add(acc, pair_mul(a(i, k), b(k, j)));
            out(i, j) = std::move(acc);
        }
    return out;
}

// [A, B] = AB (-) BA
template <Semiring S>
EndoMatrix<S> lie_bracket(const EndoMatrix<S>& a, const EndoMatrix<S>& b) {
    return mat_add(mat_mul(a, b), mat_negate(mat_mul(b, a)));
}

template <Semiring S>
bool mat_surpasses(const EndoMatrix<S>& a, const EndoMatrix<S>& b) {
    detail::require_same_dim(a, b);
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        if (!pair_surpasses(a.entries()[k], b.entries()[k])) return false;
    return true;
}

template <Semiring S>
bool mat_is_balanced(const EndoMatrix<S>& a) {
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [](const Pair<S>& c) { return c.is_quasi_zero(); });
}

template <Semiring S>
struct JacobiSides {
    EndoMatrix<S> bracket_side;   // [[A,B],C] + [B,[A,C]]
    EndoMatrix<S> composed_side;  // [A,[B,C]]
};

template <Semiring S>
JacobiSides<S> jacobi_sides(const EndoMatrix<S>& a, const EndoMatrix<S>& b, const EndoMatrix<S>& c) {
    detail::require_same_dim(a, b);
    detail::require_same_dim(a, c);
    return {mat_add(lie_bracket(lie_bracket(a, b), c), lie_bracket(b, lie_bracket(a, c))),
            lie_bracket(a, lie_bracket(b, c))};
}

// [[A,B],C] + [B,[A,C]] ⪯₀ [A,[B,C]]
template <Semiring S>
bool check_jacobi(const EndoMatrix<S>& a, const EndoMatrix<S>& b, const EndoMatrix<S>& c) {
    auto sides = jacobi_sides(a, b, c);
    return mat_surpasses(sides.bracket_side, sides.composed_side);
}

// [A,[B,C]] ⪯₀ [[A,B],C] + [B,[A,C]]
template <Semiring S>
bool check_jacobi_reverse(const EndoMatrix<S>& a, const EndoMatrix<S>& b, const EndoMatrix<S>& c) {
    auto sides = jacobi_sides(a, b, c);
    return mat_surpasses(sides.composed_side, sides.bracket_side);
}

// ad_[A,B](C) ⪯₀ ad_A ad_B (C) (-) ad_B ad_A (C)
template <Semiring S>
bool check_ad_bracket(const EndoMatrix<S>& a, const EndoMatrix<S>& b, const EndoMatrix<S>& c) {
    auto lhs = lie_bracket(lie_bracket(a, b), c);
    auto rhs = mat_add(lie_bracket(a, lie_bracket(b, c)), mat_negate(lie_bracket(b, lie_bracket(a, c))));
    return mat_surpasses(lhs, rhs);
}

}  // namespace exsys
