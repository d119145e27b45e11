#pragma once

#include "exsys/exterior.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exsys {

// Letters of a Clifford word in V: x^{l1} ⊗ x^{l2} ⊗ ...
using Letters = boost::container::small_vector<int, 6>;

template <Semiring S>
using CliffordElement = FreeElement<Letters, S>;

enum class CliffordMode { standard, reduced };

// (q, B) with 2 q(x^i) = B(x^i, x^i).
template <Semiring S>
class QuadraticPair {
public:
    QuadraticPair(std::function<Pair<S>(int)> q, BilinearForm<S> form) : q_(std::move(q)), form_(std::move(form)) {}

    Pair<S> q(int i) const { return q_(i); }
    Pair<S> b(int i, int j) const { return form_(i, j); }
    const BilinearForm<S>& form() const { return form_; }

    bool is_consistent_on(int max_index) const {
        if (!form_.is_symmetric_on(max_index)) return false;
        for (int i = 0; i <= max_index; ++i)
            if (!(pair_add(q(i), q(i)) == b(i, i))) return false;
        return true;
    }

private:
    std::function<Pair<S>(int)> q_;
    BilinearForm<S> form_;
};

template <Semiring S>
CliffordElement<S> clifford_word(std::initializer_list<int> letters, Pair<S> c = Pair<S>::one()) {
    return CliffordElement<S>::basis(Letters(letters.begin(), letters.end()), std::move(c));
}

template <Semiring S>
CliffordElement<S> clifford_scalar(Pair<S> c) {
    return CliffordElement<S>::basis(Letters{}, std::move(c));
}

namespace detail {

template <Semiring S>
void right_multiply_letter(const Letters& w, int j, const Pair<S>& c, CliffordMode mode, const QuadraticPair<S>& qp,
                           std::vector<typename CliffordElement<S>::term_type>& out) {
    if (w.empty() || w.back() < j || (mode == CliffordMode::standard && w.back() == j)) {
        Letters next = w;
        next.push_back(j);
        out.emplace_back(std::move(next), c);
        return;
    }
    const int last = w.back();
    Letters head(w.begin(), w.end() - 1);
    if (last == j) {  // reduced mode only
        out.emplace_back(std::move(head), pair_mul(c, qp.q(j)));
        return;
    }
    out.emplace_back(head, pair_mul(c, qp.b(last, j)));
    std::vector<typename CliffordElement<S>::term_type> inner;
    right_multiply_letter(head, j, pair_negate(c), mode, qp, inner);
    for (auto& [word, coeff] : inner) {
        word.push_back(last);
        out.emplace_back(std::move(word), std::move(coeff));
    }
}

template <Semiring S>
CliffordElement<S> clifford_mul(const CliffordElement<S>& u, const CliffordElement<S>& v, CliffordMode mode,
                                const QuadraticPair<S>& qp) {
    std::vector<typename CliffordElement<S>::term_type> result;
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) {
            std::vector<typename CliffordElement<S>::term_type> cur{{wu, pair_mul(cu, cv)}};
            for (int j : wv) {
                std::vector<typename CliffordElement<S>::term_type> next;
                for (const auto& [w, c] : cur) right_multiply_letter(w, j, c, mode, qp, next);
                cur = CliffordElement<S>::from_terms(std::move(next)).terms();
            }
            result.insert(result.end(), cur.begin(), cur.end());
        }
    return CliffordElement<S>::from_terms(std::move(result));
}

template <Semiring S>
void require_mode(const CliffordElement<S>& u, CliffordMode mode) {
    for (const auto& [w, c] : u)
        for (std::size_t k = 1; k < w.size(); ++k) {
            const bool ok = mode == CliffordMode::standard ? w[k - 1] <= w[k] : w[k - 1] < w[k];
            if (!ok) throw std::invalid_argument("Clifford word is not in canonical order for this mode");
        }
}

}  // namespace detail

template <Semiring S>
CliffordElement<S> mul_std(const CliffordElement<S>& u, const CliffordElement<S>& v, const QuadraticPair<S>& qp) {
    detail::require_mode(u, CliffordMode::standard);
    detail::require_mode(v, CliffordMode::standard);
    return detail::clifford_mul(u, v, CliffordMode::standard, qp);
}

template <Semiring S>
CliffordElement<S> mul_reduced(const CliffordElement<S>& u, const CliffordElement<S>& v, const QuadraticPair<S>& qp) {
    detail::require_mode(u, CliffordMode::reduced);
    detail::require_mode(v, CliffordMode::reduced);
    return detail::clifford_mul(u, v, CliffordMode::reduced, qp);
}

// (v₁⋯v_k)^σ = (−)^k v_k⋯v₁, the reversed product taken in the standard construction.
template <Semiring S>
CliffordElement<S> involution(const CliffordElement<S>& u, const QuadraticPair<S>& qp) {
    detail::require_mode(u, CliffordMode::standard);
    CliffordElement<S> out;
    for (const auto& [w, c] : u) {
        auto cur = clifford_scalar<S>(w.size() % 2 == 0 ? c : pair_negate(c));
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            cur = detail::clifford_mul(cur, CliffordElement<S>::basis(Letters{*it}), CliffordMode::standard, qp);
        out += cur;
    }
    return out;
}

// One letter of a word in x^i and ∂^j.
struct Letter {
    bool dual = false;
    int index = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using MixedWord = boost::container::small_vector<Letter, 8>;

template <Semiring S>
using MixedElement = FreeElement<MixedWord, S>;

inline bool is_normal_word(const MixedWord& w) {
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (w[k - 1].dual && !w[k].dual) return false;
        if (w[k - 1].dual == w[k].dual && w[k - 1].index <= w[k].index) return false;
    }
    return true;
}

enum class RewriteStrategy { leftmost, rightmost };

struct NormalFormOptions {
    RewriteStrategy strategy = RewriteStrategy::leftmost;
    // Delete a word as soon as two equal letters become adjacent, instead of after all swaps.
    bool eager_kill = false;
};

namespace detail {

// Sorts each block descending; returns the sign, 0 on a repeated letter.
inline int sort_blocks(MixedWord& w) {
    int sign = 1;
    auto split = std::find_if(w.begin(), w.end(), [](const Letter& l) { return l.dual; });
    for (auto [first, last] : {std::pair{w.begin(), split}, std::pair{split, w.end()}}) {
        WedgeKey idx;
        for (auto it = first; it != last; ++it) idx.push_back(it->index);
        const int s = sort_descending_with_sign(idx);
        if (s == 0) return 0;
        sign *= s;
        for (std::size_t k = 0; k < idx.size(); ++k) (first + static_cast<std::ptrdiff_t>(k))->index = idx[k];
    }
    return sign;
}

inline bool has_adjacent_repeat(const MixedWord& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] == w[k]) return true;
    return false;
}

}  // namespace detail

// Rewrites ∂^j x^i = B(x^i, x^j) (−) x^i ∂^j until every x precedes every ∂, then sorts blocks.
template <Semiring S>
MixedElement<S> normal_form(const MixedElement<S>& e, const BilinearForm<S>& form, NormalFormOptions opts = {}) {
    std::vector<typename MixedElement<S>::term_type> pending(e.begin(), e.end());
    std::vector<typename MixedElement<S>::term_type> done;
    while (!pending.empty()) {
        auto [w, c] = std::move(pending.back());
        pending.pop_back();
        if (opts.eager_kill && detail::has_adjacent_repeat(w)) continue;
        std::ptrdiff_t pos = -1;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k].dual && !w[k + 1].dual) {
                pos = static_cast<std::ptrdiff_t>(k);
                if (opts.strategy == RewriteStrategy::leftmost) break;
            }
        if (pos < 0) {
            const int sign = detail::sort_blocks(w);
            if (sign != 0) done.emplace_back(std::move(w), signed_coeff(sign, c));
            continue;
        }
        const auto k = static_cast<std::size_t>(pos);
        auto b = form(w[k + 1].index, w[k].index);
        if (!b.is_zero()) {
            MixedWord shorter;
            for (std::size_t m = 0; m < w.size(); ++m)
                if (m != k && m != k + 1) shorter.push_back(w[m]);
            pending.emplace_back(std::move(shorter), pair_mul(c, b));
        }
        std::swap(w[k], w[k + 1]);
        pending.emplace_back(std::move(w), pair_negate(c));
    }
    return MixedElement<S>::from_terms(std::move(done));
}

// Letters act right to left: x^i by wedging on the left, ∂^j by contraction.
template <Semiring S>
Wedge<S> clifford_act(const MixedElement<S>& e, const Wedge<S>& u, const BilinearForm<S>& form) {
    Wedge<S> out;
    for (const auto& [w, c] : e) {
        Wedge<S> cur = u;
        for (auto it = w.rbegin(); it != w.rend() && !cur.empty(); ++it)
            cur = it->dual ? contract(it->index, cur, form) : wedge(wedge_x<S>(it->index), cur);
        out += fe_scale(c, cur);
    }
    return out;
}

// An element u ⊕ v* of V ⊕ V*.
template <Semiring S>
struct DoubledVector {
    Vector<S> vec;
    Vector<S> dual;
};

// <u₁ ⊕ v₁*, u₂ ⊕ v₂*> = B(u₁, v₂) + B(u₂, v₁)
template <Semiring S>
Pair<S> inner_product(const DoubledVector<S>& a, const DoubledVector<S>& b, const BilinearForm<S>& form) {
    return pair_add(form.evaluate(a.vec, b.dual), form.evaluate(b.vec, a.dual));
}

}  // namespace exsys
