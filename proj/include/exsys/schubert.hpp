#pragma once

#include "exsys/series.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exsys {

enum class DerivationKind { sigma_plus, sigma_minus, sigma_plus_bar, sigma_minus_bar, hs_from_endo };

// Image of each basis vector x^j as a series with degree-1 coefficients; extended to wedges factorwise.
template <Semiring S>
class VectorMap {
public:
    using ImageFn = std::function<BiSeries<S>(int)>;

    // lowers[v]: images may carry negative degrees in v, so truncated inputs cannot be fed through.
    VectorMap(std::string name, ImageFn image, std::array<bool, 2> lowers)
        : name_(std::move(name)), image_(std::move(image)), lowers_(lowers), cache_(std::make_shared<Cache>()) {}

    const std::string& name() const { return name_; }
    bool lowers(Var v) const { return lowers_[static_cast<int>(v)]; }

    const BiSeries<S>& image(int j) const {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->images.find(j);
        if (it == cache_->images.end()) it = cache_->images.emplace(j, image_(j)).first;
        return it->second;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<int, BiSeries<S>> images;
    };
    std::string name_;
    ImageFn image_;
    std::array<bool, 2> lowers_;
    std::shared_ptr<Cache> cache_;
};

namespace detail {

template <Semiring S>
BiSeries<S> monomial_vector(int exponent, Var v, int degree, const Pair<S>& c, RankBound bound) {
    if (exponent < 0 || bound.kills(exponent)) return {};
    auto key = WedgeKey{exponent};
    std::vector<typename BiSeries<S>::term_type> raw{
        {SeriesKey{v == Var::z ? degree : 0, v == Var::w ? degree : 0, key}, c}};
    return BiSeries<S>::from_terms(std::move(raw));
}

}  // namespace detail

// σ₊(t): x^j ↦ Σ_{i≥0} x^{j+i} t^i, kept up to t^cap.
template <Semiring S>
VectorMap<S> sigma_plus(Var v, int cap, RankBound bound = {}) {
    return VectorMap<S>(
        v == Var::z ? "sigma_plus(z)" : "sigma_plus(w)",
        [=](int j) {
            std::vector<typename BiSeries<S>::term_type> raw;
            bool exact = false;
            for (int i = 0; i <= cap; ++i) {
                if (bound.kills(j + i)) {
                    exact = true;
                    break;
                }
                raw.push_back({SeriesKey{v == Var::z ? i : 0, v == Var::w ? i : 0, WedgeKey{j + i}}, Pair<S>::one()});
            }
            if (bound.kills(j + cap + 1)) exact = true;
            std::optional<int> valid;
            if (!exact) valid = cap;
            return v == Var::z ? BiSeries<S>::from_terms(std::move(raw), valid, {})
                               : BiSeries<S>::from_terms(std::move(raw), {}, valid);
        },
        {false, false});
}

// σ₋(t): x^j ↦ Σ_{i=0}^{j} x^{j−i} t^{−i}
template <Semiring S>
VectorMap<S> sigma_minus(Var v, RankBound bound = {}) {
    return VectorMap<S>(
        v == Var::z ? "sigma_minus(z)" : "sigma_minus(w)",
        [=](int j) {
            BiSeries<S> out;
            if (bound.kills(j)) return out;
            for (int i = 0; i <= j; ++i) out = out + detail::monomial_vector<S>(j - i, v, -i, Pair<S>::one(), bound);
            return out;
        },
        {v == Var::z, v == Var::w});
}

// σ̄₋(t): x^j ↦ x^j (−) x^{j−1} t^{−1}
template <Semiring S>
VectorMap<S> sigma_minus_bar(Var v, RankBound bound = {}) {
    return VectorMap<S>(
        v == Var::z ? "sigma_minus_bar(z)" : "sigma_minus_bar(w)",
        [=](int j) {
            if (bound.kills(j)) return BiSeries<S>{};
            return detail::monomial_vector<S>(j, v, 0, Pair<S>::one(), bound) +
                   detail::monomial_vector<S>(j - 1, v, -1, Pair<S>::minus_one(), bound);
        },
        {v == Var::z, v == Var::w});
}

// D̄_f(t): x^j ↦ x^j (−) f(x^j) t for an endomorphism f of V given on basis vectors.
template <Semiring S>
VectorMap<S> hs_from_endo(Var v, std::function<Vector<S>(int)> f, RankBound bound = {}, std::string name = "hs_from_endo") {
    return VectorMap<S>(
        std::move(name),
        [=](int j) {
            if (bound.kills(j)) return BiSeries<S>{};
            auto out = detail::monomial_vector<S>(j, v, 0, Pair<S>::one(), bound);
            for (const auto& [k, c] : f(j)) out = out + detail::monomial_vector<S>(k, v, 1, pair_negate(c), bound);
            return out;
        },
        {false, false});
}

// σ̄₊(t) = D̄_f(t) for the shift x^j ↦ x^{j+1}.
template <Semiring S>
VectorMap<S> sigma_plus_bar(Var v, RankBound bound = {}) {
    return hs_from_endo<S>(
        v, [](int j) { return Vector<S>::basis(j + 1); }, bound,
        v == Var::z ? "sigma_plus_bar(z)" : "sigma_plus_bar(w)");
}

// Applies the factorwise extension to one basis wedge.
template <Semiring S>
BiSeries<S> apply_to_basis(const VectorMap<S>& map, const WedgeKey& key) {
    auto out = BiSeries<S>::from_wedge(wedge_one<S>());
    for (int e : key) out = series_wedge(out, map.image(e));
    return out;
}

template <Semiring S>
BiSeries<S> apply_map(const VectorMap<S>& map, const BiSeries<S>& s) {
    for (Var v : {Var::z, Var::w})
        if (!s.is_exact(v) && map.lowers(v))
            throw std::logic_error(map.name() + " lowers degrees and cannot act on a truncated series");
    std::vector<typename BiSeries<S>::term_type> raw;
    std::array<std::optional<int>, 2> bounds = s.validity();
    for (const auto& [k, c] : s.terms()) {
        auto image = apply_to_basis(map, k.key).shifted(k.z, k.w);
        for (int v = 0; v < 2; ++v)
            if (auto b = image.validity()[v]) bounds[v] = bounds[v] ? std::min(*bounds[v], *b) : *b;
        for (const auto& [ik, ic] : image.terms()) raw.push_back({ik, pair_mul(c, ic)});
    }
    return BiSeries<S>::from_terms(std::move(raw), bounds[0], bounds[1]);
}

template <Semiring S>
BiSeries<S> apply_derivation(const VectorMap<S>& map, const Wedge<S>& u) {
    return apply_map(map, BiSeries<S>::from_wedge(u));
}

// outer ∘ inner, realized on each x^j and then extended factorwise.
template <Semiring S>
VectorMap<S> compose(const VectorMap<S>& outer, const VectorMap<S>& inner) {
    return VectorMap<S>(outer.name() + " " + inner.name(),
                        [=](int j) { return apply_map(outer, inner.image(j)); },
                        {outer.lowers(Var::z) || inner.lowers(Var::z), outer.lowers(Var::w) || inner.lowers(Var::w)});
}

// Composition of a chain, leftmost acting last.
template <Semiring S>
VectorMap<S> compose_chain(const std::vector<VectorMap<S>>& maps) {
    if (maps.empty()) throw std::invalid_argument("empty derivation chain");
    VectorMap<S> out = maps.back();
    for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) out = compose(*it, out);
    return out;
}

// σ_i(u): the t^i coefficient of σ₊(t)u.
template <Semiring S>
Wedge<S> sigma_component(int i, const Wedge<S>& u, RankBound bound = {}) {
    return apply_derivation(sigma_plus<S>(Var::z, i, bound), u).coefficient(i, 0);
}

// x(z) = σ₊(z) x⁰
template <Semiring S>
BiSeries<S> generating_x(int zcap, RankBound bound = {}) {
    return sigma_plus<S>(Var::z, zcap, bound).image(0);
}

// ∂(w⁻¹) ⌟ u = Σ_j (∂^j ⌟ u) w^{−j}, over duals j ≤ max_dual (default: the largest exponent in u).
template <Semiring S>
BiSeries<S> generating_partial(const Wedge<S>& u, const BilinearForm<S>& form, std::optional<int> max_dual = {}) {
    int top = -1;
    for (const auto& [k, c] : u)
        if (!k.empty()) top = std::max(top, k.front());
    if (max_dual) top = *max_dual;
    BiSeries<S> out;
    for (int j = 0; j <= top; ++j) out = out + BiSeries<S>::from_wedge(contract(j, u, form), 0, -j);
    return out;
}

template <Semiring S>
BiSeries<S> generating_partial(const BiSeries<S>& s, const BilinearForm<S>& form) {
    std::vector<typename BiSeries<S>::term_type> raw;
    for (const auto& [k, c] : s.terms()) {
        auto part = generating_partial(Wedge<S>::basis(k.key, c), form);
        for (const auto& [pk, pc] : part.terms()) raw.push_back({SeriesKey{k.z + pk.z, k.w + pk.w, pk.key}, pc});
    }
    return BiSeries<S>::from_terms(std::move(raw), s.valid_max(Var::z), s.valid_max(Var::w));
}

// Dual-valued series Σ_{i=0}^{wmax} ∂^{j+i} w^{−i}.
struct DualSeries {
    struct Term {
        int w;
        int dual;
    };
    std::vector<Term> terms;
    int first_dual;
    int wmax;
};

inline DualSeries transpose_sigma_minus(int j, int wmax) {
    if (wmax < 0) throw std::invalid_argument("wmax must be nonnegative");
    DualSeries out{{}, j, wmax};
    for (int i = 0; i <= wmax; ++i) out.terms.push_back({-i, j + i});
    return out;
}

// Σ_i (∂^{j+i} ⌟ u) w^{−i}; exact when every exponent of u is at most j + wmax.
template <Semiring S>
BiSeries<S> evaluate_dual_series(const DualSeries& d, const Wedge<S>& u, const BilinearForm<S>& form) {
    BiSeries<S> out;
    for (const auto& t : d.terms) out = out + BiSeries<S>::from_wedge(contract(t.dual, u, form), 0, t.w);
    return out;
}

// Σ_j sign(j) scalars[j] · (wedge of all vectors but the j-th), sign(1) = +.
template <Semiring S>
BiSeries<S> two_row_expand(const std::vector<BiSeries<S>>& scalars, const std::vector<BiSeries<S>>& vectors) {
    if (scalars.size() != vectors.size()) throw std::invalid_argument("two-row expansion needs rows of equal length");
    BiSeries<S> out;
    for (std::size_t j = 0; j < scalars.size(); ++j) {
        auto term = j % 2 == 0 ? scalars[j] : scalars[j].negated();
        for (std::size_t k = 0; k < vectors.size(); ++k)
            if (k != j) term = series_wedge(term, vectors[k]);
        out = out + term;
    }
    return out;
}

// Derivation extension of the shift x^j ↦ x^{j+step} on one basis wedge.
template <Semiring S>
Wedge<S> shift_derivation(const WedgeKey& key, int step, const Pair<S>& c) {
    std::vector<typename Wedge<S>::term_type> raw;
    for (std::size_t p = 0; p < key.size(); ++p) {
        WedgeKey next = key;
        next[p] += step;
        const int sign = sort_descending_with_sign(next);
        if (sign != 0) raw.emplace_back(std::move(next), signed_coeff(sign, c));
    }
    return Wedge<S>::from_terms(std::move(raw));
}

struct ExpComparison {
    bool agrees = false;          // exp side ⪯₀ σ₊ side at every z-degree up to the order
    bool equal_as_pairs = false;  // the two sides coincide exactly
    std::optional<Witness> witness;
};

// exp(Σ_{i≥1} (1/i) δ(x^i) z^i) u against σ₊(z) u, both up to z^order.
inline BiSeries<QPlus> exp_shift_series(const Wedge<QPlus>& u, int order) {
    auto term = BiSeries<QPlus>::from_wedge(u);
    auto total = term;
    for (int m = 1; m <= order; ++m) {
        std::vector<BiSeries<QPlus>::term_type> raw;
        for (const auto& [k, c] : term.terms())
            for (int i = 1; k.z + i <= order; ++i) {
                auto scaled = pair_mul(c, Pair<QPlus>::tangible(QPlus::from_ratio(1, static_cast<long long>(i) * m)));
                for (const auto& [key, d] : shift_derivation(k.key, i, scaled))
                    raw.push_back({SeriesKey{k.z + i, k.w, key}, d});
            }
        term = BiSeries<QPlus>::from_terms(std::move(raw));
        total = total + term;
    }
    return total.truncated(Var::z, order);
}

inline ExpComparison exp_check_on(const Wedge<QPlus>& u, int order) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    auto exp_side = exp_shift_series(u, order);
    auto sigma_side = apply_derivation(sigma_plus<QPlus>(Var::z, order), u);
    SeriesWindow window{{}, order, {}, {}};
    auto cmp = series_surpasses(exp_side, sigma_side, window);
    ExpComparison out;
    out.agrees = cmp.verdict == Verdict::holds;
    out.witness = cmp.witness;
    out.equal_as_pairs = exp_side.terms() == sigma_side.terms();
    return out;
}

// Runs exp_check_on over every basis wedge with exponents ≤ max_exponent and degree ≤ max_degree.
inline bool exp_check(int order, int max_exponent = 4, int max_degree = 3) {
    bool ok = true;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        ok = ok && exp_check_on(wedge_monomial<QPlus>(cur), order).agrees;
        if (static_cast<int>(cur.size()) == max_degree) return;
        for (int e = next; e >= 0; --e) {
            cur.push_back(e);
            self(self, e - 1);
            cur.pop_back();
        }
    };
    rec(rec, max_exponent);
    return ok;
}

}  // namespace exsys
