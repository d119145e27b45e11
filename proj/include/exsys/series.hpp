#pragma once

#include "exsys/exterior.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace exsys {

enum class Var { z = 0, w = 1 };

struct SeriesKey {
    int z = 0;
    int w = 0;
    WedgeKey key;

    friend bool operator==(const SeriesKey& a, const SeriesKey& b) {
        return a.z == b.z && a.w == b.w && a.key == b.key;
    }
    friend bool operator<(const SeriesKey& a, const SeriesKey& b) {
        if (a.z != b.z) return a.z < b.z;
        if (a.w != b.w) return a.w < b.w;
        return a.key < b.key;
    }
};

// Laurent series in z and w with wedge coefficients. Per variable, coefficients above an optional
// validity bound are unknown (truncated); without a bound the series is exact in that variable.
template <Semiring S>
class BiSeries {
public:
    using Terms = FreeElement<SeriesKey, S>;
    using term_type = typename Terms::term_type;

    BiSeries() = default;

    static BiSeries from_wedge(const Wedge<S>& u, int z = 0, int w = 0) {
        std::vector<term_type> raw;
        for (const auto& [k, c] : u) raw.push_back({SeriesKey{z, w, k}, c});
        return BiSeries(Terms::from_terms(std::move(raw)));
    }

    static BiSeries scalar(Pair<S> c, int z = 0, int w = 0) {
        return BiSeries(Terms::basis(SeriesKey{z, w, {}}, std::move(c)));
    }

    // Builds from raw terms with the given validity bounds; terms beyond them are discarded.
    static BiSeries from_terms(std::vector<term_type> raw, std::optional<int> z_valid = {},
                               std::optional<int> w_valid = {}) {
        if (z_valid || w_valid)
            std::erase_if(raw, [&](const term_type& t) {
                return (z_valid && t.first.z > *z_valid) || (w_valid && t.first.w > *w_valid);
            });
        BiSeries s(Terms::from_terms(std::move(raw)));
        s.valid_ = {z_valid, w_valid};
        return s;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::optional<int> valid_max(Var v) const { return valid_[static_cast<int>(v)]; }
    bool is_exact(Var v) const { return !valid_max(v).has_value(); }
    // True when the coefficient at (z, w) is known.
    bool is_known(int z, int w) const {
        return (!valid_[0] || z <= *valid_[0]) && (!valid_[1] || w <= *valid_[1]);
    }

    // Smallest degree that can carry a nonzero coefficient; INT_MAX for the exact zero series.
    int lower_bound(Var v) const {
        int lo = INT_MAX;
        for (const auto& t : terms_) lo = std::min(lo, v == Var::z ? t.first.z : t.first.w);
        if (auto va = valid_max(v)) lo = std::min(lo, *va + 1);
        return lo;
    }

    // Stored degree range [min, max] in one variable, or nullopt when empty.
    std::optional<std::pair<int, int>> degree_range(Var v) const {
        if (terms_.empty()) return std::nullopt;
        int lo = INT_MAX, hi = INT_MIN;
        for (const auto& t : terms_) {
            int d = v == Var::z ? t.first.z : t.first.w;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return std::pair{lo, hi};
    }

    Wedge<S> coefficient(int z, int w) const {
        std::vector<typename Wedge<S>::term_type> out;
        for (const auto& [k, c] : terms_)
            if (k.z == z && k.w == w) out.emplace_back(k.key, c);
        return Wedge<S>::from_sorted_unchecked(std::move(out));
    }

    // All (z, w) degrees carrying a nonzero coefficient.
    std::vector<std::pair<int, int>> support() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& t : terms_)
            if (out.empty() || out.back() != std::pair{t.first.z, t.first.w}) out.emplace_back(t.first.z, t.first.w);
        return out;
    }

    BiSeries shifted(int dz, int dw) const {
        std::vector<term_type> raw;
        raw.reserve(terms_.size());
        for (const auto& [k, c] : terms_) raw.push_back({SeriesKey{k.z + dz, k.w + dw, k.key}, c});
        BiSeries s(Terms::from_sorted_unchecked(std::move(raw)));
        s.valid_ = valid_;
        if (s.valid_[0]) *s.valid_[0] += dz;
        if (s.valid_[1]) *s.valid_[1] += dw;
        return s;
    }

    // Forgets coefficients above the given degree.
    BiSeries truncated(Var v, int max_degree) const {
        auto bounds = valid_;
        auto& b = bounds[static_cast<int>(v)];
        b = b ? std::min(*b, max_degree) : max_degree;
        return from_terms(terms_.terms(), bounds[0], bounds[1]);
    }

    BiSeries negated() const {
        BiSeries s(fe_negate(terms_));
        s.valid_ = valid_;
        return s;
    }

    BiSeries scaled(const Pair<S>& c) const {
        BiSeries s(fe_scale(c, terms_));
        s.valid_ = valid_;
        return s;
    }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        std::array<std::optional<int>, 2> bounds;
        for (int v = 0; v < 2; ++v) bounds[v] = min_bound(a.valid_[v], b.valid_[v]);
        auto sum = a.terms_ + b.terms_;
        return from_terms(sum.terms(), bounds[0], bounds[1]);
    }

    std::array<std::optional<int>, 2> validity() const { return valid_; }

private:
    explicit BiSeries(Terms t) : terms_(std::move(t)) {}

    static std::optional<int> min_bound(std::optional<int> a, std::optional<int> b) {
        if (a && b) return std::min(*a, *b);
        return a ? a : b;
    }

    Terms terms_;
    std::array<std::optional<int>, 2> valid_{};
};

namespace detail {

// Validity bound of a product in one variable.
inline std::optional<int> product_bound(std::optional<int> va, int lower_a, std::optional<int> vb, int lower_b) {
    std::optional<int> out;
    auto take = [&](long long candidate) {
        int c = static_cast<int>(std::clamp<long long>(candidate, INT_MIN / 2, INT_MAX / 2));
        out = out ? std::min(*out, c) : c;
    };
    if (va && lower_b != INT_MAX) take(static_cast<long long>(*va) + lower_b);
    if (vb && lower_a != INT_MAX) take(static_cast<long long>(*vb) + lower_a);
    return out;
}

}  // namespace detail

// Cauchy product with the wedge product on coefficients.
template <Semiring S>
BiSeries<S> series_wedge(const BiSeries<S>& a, const BiSeries<S>& b) {
    std::array<std::optional<int>, 2> bounds;
    for (Var v : {Var::z, Var::w})
        bounds[static_cast<int>(v)] =
            detail::product_bound(a.valid_max(v), a.lower_bound(v), b.valid_max(v), b.lower_bound(v));
    std::vector<typename BiSeries<S>::term_type> raw;
    raw.reserve(a.size() * b.size());
    WedgeKey key;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const int z = ka.z + kb.z;
            const int w = ka.w + kb.w;
            if ((bounds[0] && z > *bounds[0]) || (bounds[1] && w > *bounds[1])) continue;
            const int sign = concat_keys(ka.key, kb.key, key);
            if (sign == 0) continue;
            raw.push_back({SeriesKey{z, w, key}, signed_coeff(sign, pair_mul(ca, cb))});
        }
    return BiSeries<S>::from_terms(std::move(raw), bounds[0], bounds[1]);
}

// Applies a coefficient-level linear map termwise; degrees and validity are unchanged.
template <Semiring S, class F>
BiSeries<S> map_coefficients(const BiSeries<S>& s, F&& f) {
    std::vector<typename BiSeries<S>::term_type> raw;
    for (const auto& [k, c] : s.terms()) {
        auto image = f(Wedge<S>::basis(k.key, c));
        for (const auto& [key, d] : image) raw.push_back({SeriesKey{k.z, k.w, key}, d});
    }
    return BiSeries<S>::from_terms(std::move(raw), s.valid_max(Var::z), s.valid_max(Var::w));
}

// S ⪯₀ T on the degrees inside a reporting window.
struct SeriesWindow {
    std::optional<int> zmin, zmax, wmin, wmax;
    bool contains(int z, int w) const {
        return (!zmin || z >= *zmin) && (!zmax || z <= *zmax) && (!wmin || w >= *wmin) && (!wmax || w <= *wmax);
    }
};

enum class Verdict { holds, fails, inconclusive };

struct Witness {
    int z = 0;
    int w = 0;
    WedgeKey key;
};

struct SeriesComparison {
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;  // first failing (or unknown) coefficient
};

template <Semiring S>
SeriesComparison series_surpasses(const BiSeries<S>& lhs, const BiSeries<S>& rhs, const SeriesWindow& window) {
    SeriesComparison out;
    std::vector<std::pair<int, int>> degrees = lhs.support();
    auto rs = rhs.support();
    degrees.insert(degrees.end(), rs.begin(), rs.end());
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::optional<Witness> unknown;
    for (auto [z, w] : degrees) {
        if (!window.contains(z, w)) continue;
        if (!lhs.is_known(z, w) || !rhs.is_known(z, w)) {
            if (!unknown) unknown = Witness{z, w, {}};
            continue;
        }
        auto a = lhs.coefficient(z, w);
        auto b = rhs.coefficient(z, w);
        if (const auto* key = first_surpass_failure(a, b)) {
            out.verdict = Verdict::fails;
            out.witness = Witness{z, w, *key};
            return out;
        }
    }
    // A window reaching past what either side knows cannot be certified.
    for (Var v : {Var::z, Var::w}) {
        auto upper = v == Var::z ? window.zmax : window.wmax;
        for (const auto* s : {&lhs, &rhs}) {
            auto va = s->valid_max(v);
            if (va && (!upper || *upper > *va) && !unknown)
                unknown = Witness{v == Var::z ? *va + 1 : 0, v == Var::w ? *va + 1 : 0, {}};
        }
    }
    if (unknown) {
        out.verdict = Verdict::inconclusive;
        out.witness = unknown;
    }
    return out;
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace exsys
