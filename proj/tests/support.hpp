#pragma once

#include "exsys/clifford.hpp"
#include "exsys/schubert.hpp"

#include <random>
#include <string>
#include <vector>

namespace exsys::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

template <Semiring S>
typename S::value_type scalar(const std::string& text) {
    return S::parse(text);
}

template <Semiring S>
typename S::value_type random_scalar() {
    if constexpr (std::is_same_v<S, QPlus>) {
        return S::parse(std::to_string(uniform(0, 6)) + "/" + std::to_string(uniform(1, 3)));
    } else if constexpr (std::is_same_v<S, MaxPlus>) {
        const int k = uniform(-1, 5);
        return k < 0 ? S::zero() : S::parse(std::to_string(k));
    } else {
        return S::parse(std::to_string(uniform(0, 5)));
    }
}

template <Semiring S>
typename S::value_type random_nonzero_scalar() {
    for (;;) {
        auto v = random_scalar<S>();
        if (!S::eq(v, S::zero())) return v;
    }
}

// Pair from decimal literals, e.g. P<Nat>("2", "1"); max-plus accepts "-inf".
template <Semiring S>
Pair<S> P(const std::string& pos, const std::string& neg) {
    return Pair<S>{S::parse(pos), S::parse(neg)};
}

template <Semiring S>
Pair<S> random_pair() {
    return Pair<S>{random_scalar<S>(), random_scalar<S>()};
}

template <Semiring S>
Pair<S> random_tangible() {
    auto a = random_nonzero_scalar<S>();
    return uniform(0, 1) ? Pair<S>::tangible(a) : pair_negate(Pair<S>::tangible(a));
}

template <Semiring S>
EndoMatrix<S> random_tangible_matrix(std::size_t dim) {
    EndoMatrix<S> m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (uniform(0, 2)) m(i, j) = random_tangible<S>();
    return m;
}

template <Semiring S>
Vector<S> random_vector(int max_index, int terms) {
    std::vector<typename Vector<S>::term_type> raw;
    for (int t = 0; t < terms; ++t) raw.push_back({uniform(0, max_index), random_pair<S>()});
    return Vector<S>::from_terms(std::move(raw));
}

// Every strictly descending key with entries < bound and size ≤ max_degree.
inline std::vector<WedgeKey> all_keys(int bound, int max_degree) {
    std::vector<WedgeKey> out{WedgeKey{}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        const WedgeKey cur = out[k];
        if (static_cast<int>(cur.size()) == max_degree) continue;
        const int top = cur.empty() ? bound : cur.back();
        for (int e = 0; e < top; ++e) {
            WedgeKey next = cur;
            next.push_back(e);
            out.push_back(next);
        }
    }
    return out;
}

template <Semiring S>
Wedge<S> basis_wedge(const WedgeKey& key) {
    return Wedge<S>::basis(key);
}

}  // namespace exsys::testing
