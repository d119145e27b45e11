#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace exsys;
using namespace exsys::testing;

namespace {

Partition part(std::vector<int> p) { return Partition(std::move(p)); }

WedgeKey key(std::initializer_list<int> e) { return WedgeKey(e.begin(), e.end()); }

// Horizontal strips by direct enumeration of bounded integer vectors.
std::set<Partition> strip_oracle(const Partition& lambda, int i, int r) {
    std::set<Partition> out;
    std::vector<int> mu(r, 0);
    const int total = lambda.weight() + i;
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k == r) {
            if (remaining != 0) return;
            for (int j = 0; j < r; ++j) {
                if (mu[j] < lambda.part(j + 1)) return;
                if (j > 0 && mu[j] > lambda.part(j)) return;
                if (j > 0 && mu[j] > mu[j - 1]) return;
            }
            out.insert(Partition(mu));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            mu[k] = v;
            self(self, k + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("partition validation") {
    CHECK(part({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    CHECK_THROWS_AS(part({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(part({2, -1}), std::invalid_argument);
    CHECK(part({3, 2, 1}).weight() == 6);
    CHECK(format_partition(Partition{}) == "0");
    CHECK(parse_partition("3,2,1") == part({3, 2, 1}));
    CHECK(parse_partition("0") == Partition{});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS(parse_partition("3,x"));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(part({3, 3, 2, 1, 1})) == part({5, 3, 2}));
    CHECK(conjugate(Partition{}) == Partition{});
    for (int w = 0; w <= 12; ++w)
        for (const auto& lambda : partitions_of(w, w)) REQUIRE(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("partition enumeration counts") {
    // p(n) for n = 0..10
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n, n).size() == counts[n]);
    CHECK(partitions_of(6, 2).size() == 4);
    CHECK(partitions_up_to(6, 3).size() == 1 + 1 + 2 + 3 + 4 + 5 + 7);
}

TEST_CASE("exponent_tuple") {
    CHECK(exponent_tuple(3, part({3, 2, 1})) == key({5, 3, 1}));
    CHECK(exponent_tuple(2, part({2, 1})) == key({3, 1}));
    CHECK(exponent_tuple(2, Partition{}) == key({1, 0}));
    CHECK_THROWS_AS(exponent_tuple(1, part({1, 1})), std::invalid_argument);
}

TEST_CASE("canonicalize_tuple") {
    auto a = canonicalize_tuple({3, 1});
    CHECK(a.orientation == Orientation::positive);
    CHECK(a.degree == 2);
    CHECK(a.partition == part({2, 1}));
    auto b = canonicalize_tuple({1, 3});
    CHECK(b.orientation == Orientation::negative);
    CHECK(b.partition == part({2, 1}));
    CHECK(canonicalize_tuple({2, 5, 2}).orientation == Orientation::zero);
    CHECK(canonicalize_tuple({}).orientation == Orientation::positive);
}

TEST_CASE("canonicalize round trip and swap parity") {
    for (int r = 1; r <= 4; ++r)
        for (const auto& lambda : partitions_up_to(8, r)) {
            auto k = exponent_tuple(r, lambda);
            std::vector<int> t(k.begin(), k.end());
            auto c = canonicalize_tuple(t);
            REQUIRE(c.orientation == Orientation::positive);
            REQUIRE(c.degree == r);
            REQUIRE(c.partition == lambda);
            REQUIRE(key_partition(k) == lambda);
            if (r >= 2) {
                std::swap(t[0], t[1]);
                REQUIRE(canonicalize_tuple(t).orientation == Orientation::negative);
            }
        }
}

TEST_CASE("sort_descending_with_sign") {
    for (int t = 0; t < 500; ++t) {
        const int len = uniform(0, 6);
        WedgeKey k;
        for (int i = 0; i < len; ++i) k.push_back(uniform(0, 8));
        WedgeKey sorted = k;
        const int sign = sort_descending_with_sign(sorted);
        std::set<int> distinct(k.begin(), k.end());
        if (distinct.size() != k.size()) {
            REQUIRE(sign == 0);
            continue;
        }
        REQUIRE(std::is_sorted(sorted.begin(), sorted.end(), std::greater<>()));
        int inversions = 0;
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = i + 1; j < k.size(); ++j)
                if (k[i] < k[j]) ++inversions;
        REQUIRE(sign == (inversions % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("pieri examples") {
    auto mus = pieri(part({2, 1}), 3, 2);
    CHECK(std::set<Partition>(mus.begin(), mus.end()) == std::set<Partition>{part({5, 1}), part({4, 2})});
    CHECK(pieri(part({3, 1}), 0, 2) == std::vector<Partition>{part({3, 1})});
    CHECK(pieri(part({1}), 2, 1) == std::vector<Partition>{part({3})});
    // bounded rank: μ₁ ≤ n − r
    auto bounded = pieri(part({2, 1}), 3, 2, RankBound::of(6));
    CHECK(bounded == std::vector<Partition>{part({4, 2})});
}

TEST_CASE("pieri agrees with strip enumeration") {
    for (int r = 1; r <= 3; ++r)
        for (const auto& lambda : partitions_up_to(6, r))
            for (int i = 0; i <= 4; ++i) {
                auto mus = pieri(lambda, i, r);
                std::set<Partition> got(mus.begin(), mus.end());
                REQUIRE(got.size() == mus.size());
                REQUIRE(got == strip_oracle(lambda, i, r));
                for (const auto& mu : mus) REQUIRE(interlaces(mu, lambda, r));
            }
}

TEST_CASE("monomial_to_partition") {
    CHECK(monomial_to_partition({0, 0, 0}) == Partition{});
    CHECK(monomial_to_partition({1, 1}) == part({2, 1}));
    CHECK(monomial_to_partition({0, 0, 1}) == part({1, 1, 1}));
    CHECK(monomial_to_partition({2}) == part({2}));
}

}  // TEST_SUITE
