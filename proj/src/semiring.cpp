#include "exsys/semiring.hpp"

#include <cctype>

namespace exsys {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::invalid_argument bad_scalar(std::string_view text, std::string_view id) {
    return std::invalid_argument("invalid " + std::string(id) + " scalar '" + std::string(text) + "'");
}

}  // namespace

Nat::value_type Nat::parse(std::string_view text) {
    if (!all_digits(text)) throw bad_scalar(text, id);
    return value_type(std::string(text));
}

QPlus::value_type QPlus::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(text)) throw bad_scalar(text, id);
        return value_type(BigInt(std::string(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad_scalar(text, id);
    BigInt d(std::string{den});
    if (d == 0) throw bad_scalar(text, id);
    return value_type(BigInt(std::string(num)), d);
}

MaxPlus::value_type MaxPlus::parse(std::string_view text) {
    if (text == "-inf") return zero();
    auto digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) throw bad_scalar(text, id);
    return Tropical::finite(BigInt(std::string(text)));
}

std::vector<SemiringInfo> builtin_semirings() {
    return {
        {std::string(Nat::id), "natural numbers, arbitrary precision", Nat::idempotent_add},
        {std::string(QPlus::id), "nonnegative rationals, exact", QPlus::idempotent_add},
        {std::string(MaxPlus::id), "max-plus over Z with -inf", MaxPlus::idempotent_add},
    };
}

}  // namespace exsys
