#pragma once

#include "exsys/free_module.hpp"
#include "exsys/partition.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace exsys {

template <Semiring S>
using Wedge = FreeElement<WedgeKey, S>;

// Linear combination of basis vectors x^i (or of duals ∂^j).
template <Semiring S>
using Vector = FreeElement<int, S>;

template <Semiring S>
Wedge<S> wedge_one() {
    return Wedge<S>::basis(WedgeKey{});
}

// [x]^r_λ
template <Semiring S>
Wedge<S> schubert_basis(int r, const Partition& lambda) {
    return Wedge<S>::basis(exponent_tuple(r, lambda));
}

// x^{e1} ∧ x^{e2} ∧ ... for an arbitrary exponent list.
template <Semiring S>
Wedge<S> wedge_monomial(const std::vector<int>& exponents, Pair<S> c = Pair<S>::one()) {
    WedgeKey key(exponents.begin(), exponents.end());
    const int sign = sort_descending_with_sign(key);
    if (sign == 0) return {};
    return Wedge<S>::basis(std::move(key), sign > 0 ? c : pair_negate(c));
}

template <Semiring S>
Wedge<S> wedge_x(int i) {
    return Wedge<S>::basis(WedgeKey{i});
}

// Drops basis wedges containing an exponent killed by the rank bound.
template <Semiring S>
Wedge<S> truncate_rank(const Wedge<S>& u, RankBound bound) {
    if (!bound.n) return u;
    std::vector<typename Wedge<S>::term_type> kept;
    for (const auto& t : u)
        if (t.first.empty() || !bound.kills(t.first.front())) kept.push_back(t);
    return Wedge<S>::from_sorted_unchecked(std::move(kept));
}

// Concatenates two descending keys and canonicalizes; returns the sign (0 on a repeat).
inline int concat_keys(const WedgeKey& a, const WedgeKey& b, WedgeKey& out) {
    out.assign(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return sort_descending_with_sign(out);
}

template <Semiring S>
Pair<S> signed_coeff(int sign, const Pair<S>& c) {
    return sign > 0 ? c : pair_negate(c);
}

template <Semiring S>
Wedge<S> wedge(const Wedge<S>& u, const Wedge<S>& v) {
    std::vector<typename Wedge<S>::term_type> raw;
    raw.reserve(u.size() * v.size());
    WedgeKey key;
    for (const auto& [ku, cu] : u)
        for (const auto& [kv, cv] : v) {
            const int sign = concat_keys(ku, kv, key);
            if (sign == 0) continue;
            raw.emplace_back(key, signed_coeff(sign, pair_mul(cu, cv)));
        }
    return Wedge<S>::from_terms(std::move(raw));
}

template <Semiring S>
Wedge<S> wedge_vector(const Vector<S>& v) {
    std::vector<typename Wedge<S>::term_type> raw;
    for (const auto& [i, c] : v) raw.emplace_back(WedgeKey{i}, c);
    return Wedge<S>::from_terms(std::move(raw));
}

// Symmetric pairing data: value(i, j) = B(x^i, x^j).
template <Semiring S>
class BilinearForm {
public:
    enum class Kind { kronecker, entries, rule };

    static BilinearForm kronecker() { return BilinearForm(Kind::kronecker, {}, {}); }

    // Missing entries are zero.
    static BilinearForm from_entries(std::map<std::pair<int, int>, Pair<S>> entries) {
        return BilinearForm(Kind::entries, std::move(entries), {});
    }

    static BilinearForm from_rule(std::function<Pair<S>(int, int)> rule) {
        return BilinearForm(Kind::rule, {}, std::move(rule));
    }

    Kind kind() const { return kind_; }

    Pair<S> operator()(int i, int j) const {
        switch (kind_) {
            case Kind::kronecker:
                return i == j ? Pair<S>::one() : Pair<S>::zero();
            case Kind::entries: {
                auto it = entries_.find({i, j});
                return it == entries_.end() ? Pair<S>::zero() : it->second;
            }
            case Kind::rule:
                return rule_(i, j);
        }
        return Pair<S>::zero();
    }

    // ∂^a applied to x^b.
    Pair<S> pairing(int dual, int vec) const { return (*this)(vec, dual); }

    bool is_symmetric_on(int max_index) const {
        for (int i = 0; i <= max_index; ++i)
            for (int j = 0; j < i; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    // B(v, w) extended bilinearly.
    Pair<S> evaluate(const Vector<S>& v, const Vector<S>& w) const {
        auto acc = Pair<S>::zero();
        for (const auto& [i, a] : v)
            for (const auto& [j, b] : w) acc = pair_add(acc, pair_mul(pair_mul(a, b), (*this)(i, j)));
        return acc;
    }

private:
    BilinearForm(Kind k, std::map<std::pair<int, int>, Pair<S>> e, std::function<Pair<S>(int, int)> r)
        : kind_(k), entries_(std::move(e)), rule_(std::move(r)) {}

    Kind kind_;
    std::map<std::pair<int, int>, Pair<S>> entries_;
    std::function<Pair<S>(int, int)> rule_;
};

// ∂ ⌟ (u₁∧⋯∧u_k) = Σ_j (−)^{j−1} ∂(u_j) u₁∧⋯û_j⋯∧u_k, linear in both arguments.
template <Semiring S>
Wedge<S> contract(const Vector<S>& duals, const Wedge<S>& u, const BilinearForm<S>& form) {
    std::vector<typename Wedge<S>::term_type> raw;
    for (const auto& [key, c] : u)
        for (std::size_t p = 0; p < key.size(); ++p)
            for (const auto& [a, d] : duals) {
                auto pr = form.pairing(a, key[p]);
                if (pr.is_zero()) continue;
                WedgeKey rest;
                for (std::size_t q = 0; q < key.size(); ++q)
                    if (q != p) rest.push_back(key[q]);
                auto coeff = pair_mul(pair_mul(c, d), pr);
                raw.emplace_back(std::move(rest), signed_coeff(p % 2 == 0 ? 1 : -1, coeff));
            }
    return Wedge<S>::from_terms(std::move(raw));
}

template <Semiring S>
Wedge<S> contract(int dual_index, const Wedge<S>& u, const BilinearForm<S>& form) {
    return contract(Vector<S>::basis(dual_index), u, form);
}

// x^i ⊗ ∂^j with an orientation sign.
struct GlGenerator {
    int i = 0;
    int j = 0;
    bool negative = false;
};

// (x^i ⊗ ∂^j)(u) = x^i ∧ (∂^j ⌟ u)
template <Semiring S>
Wedge<S> apply_gl(const GlGenerator& g, const Wedge<S>& u, const BilinearForm<S>& form) {
    auto out = wedge(wedge_x<S>(g.i), contract(g.j, u, form));
    return g.negative ? fe_negate(out) : out;
}

// Derivation extension δ(φ) of φ = Σ generators, applied factorwise.
template <Semiring S>
Wedge<S> delta_extend(const std::vector<GlGenerator>& phi, const Wedge<S>& u, const BilinearForm<S>& form) {
    std::vector<typename Wedge<S>::term_type> raw;
    for (const auto& [key, c] : u)
        for (std::size_t p = 0; p < key.size(); ++p)
            for (const auto& g : phi) {
                auto pr = form.pairing(g.j, key[p]);
                if (pr.is_zero()) continue;
                WedgeKey next = key;
                next[p] = g.i;
                const int sign = sort_descending_with_sign(next);
                if (sign == 0) continue;
                auto coeff = signed_coeff(g.negative ? -sign : sign, pair_mul(c, pr));
                raw.emplace_back(std::move(next), std::move(coeff));
            }
    return Wedge<S>::from_terms(std::move(raw));
}

template <Semiring S>
struct CommutationVerdicts {
    bool wedge_anticommute = false;     // x^i∧x^j∧u + x^j∧x^i∧u ⪰ 0
    bool contract_anticommute = false;  // ∂_i⌟(∂_j⌟u) + ∂_j⌟(∂_i⌟u) ⪰ 0
    bool mixed = false;                 // ∂_i⌟(x^j∧u) + x^j∧(∂_i⌟u) ⪰ ∂_i(x^j) u
    bool mixed_swapped = false;         // ∂_j⌟(x^i∧u) + x^i∧(∂_j⌟u) ⪰ ∂_j(x^i) u
    friend bool operator==(const CommutationVerdicts&, const CommutationVerdicts&) = default;
};

template <Semiring S>
CommutationVerdicts<S> check_commutations(int i, int j, const Wedge<S>& u, const BilinearForm<S>& form) {
    const Wedge<S> zero;
    CommutationVerdicts<S> out;
    auto xi = wedge_x<S>(i);
    auto xj = wedge_x<S>(j);
    out.wedge_anticommute = fe_surpasses(zero, wedge(xi, wedge(xj, u)) + wedge(xj, wedge(xi, u)));
    out.contract_anticommute =
        fe_surpasses(zero, contract(i, contract(j, u, form), form) + contract(j, contract(i, u, form), form));
    auto mixed = [&](int d, const Wedge<S>& xv, int v) {
        auto lhs = contract(d, wedge(xv, u), form) + wedge(xv, contract(d, u, form));
        return fe_surpasses(fe_scale(form.pairing(d, v), u), lhs);
    };
    out.mixed = mixed(i, xj, j);
    out.mixed_swapped = mixed(j, xi, i);
    return out;
}

// B'(x^i, x^j) = B(x^i, x^j)°
template <Semiring S>
BilinearForm<S> make_circ_form(const BilinearForm<S>& form) {
    return BilinearForm<S>::from_rule([form](int i, int j) {
        auto b = form(i, j);
        return pair_add(b, pair_negate(b));
    });
}

// B'(v, w) = ind(v) ind(w) B(v, w)°, ind = number of nonzero coordinates.
template <Semiring S>
Pair<S> circ_form_evaluate(const BilinearForm<S>& form, const Vector<S>& v, const Vector<S>& w) {
    auto b = form.evaluate(v, w);
    auto ind = Pair<S>::tangible(S::from_int(static_cast<long long>(v.size() * w.size())));
    return pair_mul(ind, pair_add(b, pair_negate(b)));
}

// B'(a₀v₀ + a₁v₁, w) ⪰ a₀B'(v₀, w) + a₁B'(v₁, w) and the mirror inequality in the second slot.
template <Semiring S>
bool check_circ_bilinearity(const BilinearForm<S>& form, const Pair<S>& a0, const Vector<S>& v0,
                            const Pair<S>& a1, const Vector<S>& v1, const Vector<S>& w) {
    auto combo = fe_scale(a0, v0) + fe_scale(a1, v1);
    auto left = circ_form_evaluate(form, combo, w);
    auto left_split = pair_add(pair_mul(a0, circ_form_evaluate(form, v0, w)),
                               pair_mul(a1, circ_form_evaluate(form, v1, w)));
    auto right = circ_form_evaluate(form, w, combo);
    auto right_split = pair_add(pair_mul(a0, circ_form_evaluate(form, w, v0)),
                                pair_mul(a1, circ_form_evaluate(form, w, v1)));
    return pair_surpasses(left_split, left) && pair_surpasses(right_split, right);
}

// Type-2 post-normalization, only for cancellative semirings.
template <Semiring S>
Wedge<S> type2_normalize(const Wedge<S>& u) {
    return fe_cancel_balanced(u);
}

}  // namespace exsys
