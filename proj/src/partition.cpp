#include "exsys/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace exsys {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(lambda.empty() ? 0 : lambda.parts().front(), 0);
    for (int p : lambda.parts())
        for (int c = 0; c < p; ++c) ++out[c];
    return Partition(std::move(out));
}

WedgeKey exponent_tuple(int r, const Partition& lambda) {
    if (r < 0) throw std::invalid_argument("degree must be nonnegative");
    if (lambda.length() > r) throw std::invalid_argument("partition has more than r parts");
    WedgeKey key;
    for (int i = 1; i <= r; ++i) key.push_back(r - i + lambda.part(i));
    return key;
}

Partition key_partition(const WedgeKey& key) {
    const int r = static_cast<int>(key.size());
    std::vector<int> parts;
    for (int i = 1; i <= r; ++i) parts.push_back(key[i - 1] - (r - i));
    return Partition(std::move(parts));
}

int sort_descending_with_sign(WedgeKey& key) {
    int inversions = 0;
    // insertion sort: keys are short
    for (std::size_t i = 1; i < key.size(); ++i) {
        int v = key[i];
        std::size_t j = i;
        while (j > 0 && key[j - 1] < v) {
            key[j] = key[j - 1];
            --j;
            ++inversions;
        }
        if (j > 0 && key[j - 1] == v) return 0;
        key[j] = v;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

CanonicalTuple canonicalize_tuple(const std::vector<int>& tuple) {
    WedgeKey key(tuple.begin(), tuple.end());
    for (int e : key)
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    CanonicalTuple out;
    out.degree = static_cast<int>(key.size());
    const int sign = sort_descending_with_sign(key);
    if (sign == 0) return out;
    out.orientation = sign > 0 ? Orientation::positive : Orientation::negative;
    out.partition = key_partition(key);
    out.key = std::move(key);
    return out;
}

bool interlaces(const Partition& mu, const Partition& lambda, int r) {
    if (mu.length() > r || lambda.length() > r) return false;
    for (int k = 1; k <= r; ++k) {
        if (mu.part(k) < lambda.part(k)) return false;
        if (k < r && lambda.part(k) < mu.part(k + 1)) return false;
    }
    return true;
}

std::vector<Partition> pieri(const Partition& lambda, int i, int r, RankBound bound) {
    if (i < 0) throw std::invalid_argument("pieri degree must be nonnegative");
    if (lambda.length() > r) throw std::invalid_argument("partition has more than r parts");
    std::vector<Partition> out;
    std::vector<int> mu(r, 0);
    const int cap = bound.n ? *bound.n - r : -1;
    // choose μ_k in [λ_k, λ_{k-1}] (μ₁ unbounded above) so that the added boxes sum to i
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k > r) {
            if (remaining == 0) out.emplace_back(mu);
            return;
        }
        const int lo = lambda.part(k);
        int hi = k == 1 ? lo + remaining : std::min(lambda.part(k - 1), lo + remaining);
        if (k == 1 && cap >= 0) hi = std::min(hi, cap);
        for (int v = hi; v >= lo; --v) {
            mu[k - 1] = v;
            self(self, k + 1, remaining - (v - lo));
        }
    };
    if (cap < 0 && bound.n) return out;
    rec(rec, 1, i);
    return out;
}

Partition monomial_to_partition(const std::vector<int>& exponents) {
    std::vector<int> parts;
    for (int k = static_cast<int>(exponents.size()); k >= 1; --k) {
        if (exponents[k - 1] < 0) throw std::invalid_argument("exponents must be nonnegative");
        parts.insert(parts.end(), exponents[k - 1], k);
    }
    return conjugate(Partition(std::move(parts)));
}

std::vector<Partition> partitions_of(int weight, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int v = std::min(remaining, largest); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, weight, weight);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_parts) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto ps = partitions_of(w, max_parts);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::string format_partition(const Partition& lambda) {
    if (lambda.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.find_first_not_of(' ') == std::string_view::npos) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("invalid partition '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace exsys
