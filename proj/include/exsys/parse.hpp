#pragma once

#include "exsys/clifford.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace exsys {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Syntax tree of an expression such as "[2,1]x5^x3 + neg(d1 * x1)".
struct Expr {
    enum class Kind { sum, product, wedge, x, d, one, zero, neg, coeff };
    Kind kind = Kind::one;
    int index = 0;           // x / d
    std::string pos, neg;    // coeff
    std::vector<Expr> args;  // sum / product / wedge / neg / coeff
    int line = 1;
    int column = 1;
};

Expr parse_syntax(std::string_view src);

struct ParseOptions {
    RankBound bound;
};

template <Semiring S>
struct ParsedExpression {
    MixedElement<S> value;
    std::vector<std::string> warnings;
    bool has_duals = false;
};

namespace detail {

template <Semiring S>
MixedElement<S> multiply_words(const MixedElement<S>& a, const MixedElement<S>& b) {
    std::vector<typename MixedElement<S>::term_type> raw;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            MixedWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            raw.emplace_back(std::move(w), pair_mul(ca, cb));
        }
    return MixedElement<S>::from_terms(std::move(raw));
}

template <Semiring S>
MixedElement<S> lower(const Expr& e, const ParseOptions& opts, ParsedExpression<S>& out) {
    auto check_index = [&](const Expr& atom) {
        if (opts.bound.kills(atom.index))
            throw ParseError("index " + std::to_string(atom.index) + " is outside the rank bound", atom.line,
                             atom.column);
    };
    switch (e.kind) {
        case Expr::Kind::one:
            return MixedElement<S>::basis(MixedWord{});
        case Expr::Kind::zero:
            return {};
        case Expr::Kind::x:
        case Expr::Kind::d:
            check_index(e);
            if (e.kind == Expr::Kind::d) out.has_duals = true;
            return MixedElement<S>::basis(MixedWord{Letter{e.kind == Expr::Kind::d, e.index}});
        case Expr::Kind::neg:
            return fe_negate(lower<S>(e.args.front(), opts, out));
        case Expr::Kind::coeff: {
            Pair<S> c;
            try {
                c = Pair<S>{S::parse(e.pos), S::parse(e.neg)};
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), e.line, e.column);
            }
            return fe_scale(c, lower<S>(e.args.front(), opts, out));
        }
        case Expr::Kind::sum: {
            MixedElement<S> acc;
            for (const auto& a : e.args) acc += lower<S>(a, opts, out);
            return acc;
        }
        case Expr::Kind::wedge:
        case Expr::Kind::product: {
            if (e.kind == Expr::Kind::wedge) {
                std::vector<int> seen;
                for (const auto& a : e.args) {
                    if (a.kind != Expr::Kind::x) continue;
                    if (std::find(seen.begin(), seen.end(), a.index) != seen.end()) {
                        out.warnings.push_back("repeated factor x" + std::to_string(a.index) + " at " +
                                               std::to_string(e.line) + ":" + std::to_string(e.column) +
                                               " makes the wedge vanish");
                        break;
                    }
                    seen.push_back(a.index);
                }
            }
            auto acc = MixedElement<S>::basis(MixedWord{});
            for (const auto& a : e.args) acc = multiply_words(acc, lower<S>(a, opts, out));
            return acc;
        }
    }
    return {};
}

}  // namespace detail

// Parses into a sum of (not yet normalized) mixed words.
template <Semiring S>
ParsedExpression<S> parse_expression(std::string_view src, ParseOptions opts = {}) {
    ParsedExpression<S> out;
    out.value = detail::lower<S>(parse_syntax(src), opts, out);
    return out;
}

// Lowers a word with only x letters to a wedge monomial; throws if a ∂ letter is present.
template <Semiring S>
Wedge<S> to_wedge(const MixedElement<S>& e) {
    Wedge<S> out;
    for (const auto& [w, c] : e) {
        std::vector<int> exps;
        for (const auto& l : w) {
            if (l.dual) throw std::invalid_argument("expression contains dual letters; it is not a wedge");
            exps.push_back(l.index);
        }
        out += wedge_monomial<S>(exps, c);
    }
    return out;
}

// Parses a wedge expression; repeated factors vanish (and are reported as warnings).
template <Semiring S>
Wedge<S> parse_wedge(std::string_view src, std::vector<std::string>* warnings = nullptr, ParseOptions opts = {}) {
    auto parsed = parse_expression<S>(src, opts);
    if (warnings) *warnings = parsed.warnings;
    if (parsed.has_duals) throw ParseError("dual letter in a wedge expression", 1, 1);
    return to_wedge(parsed.value);
}

// Printing ---------------------------------------------------------------------------------------

std::string format_wedge_key(const WedgeKey& key, bool swap_first_two = false);
std::string format_mixed_word(const MixedWord& w);

template <Semiring S>
std::string format_term(const std::string& body, bool body_is_unit, const Pair<S>& c, const std::string& swapped) {
    if (c == Pair<S>::one()) return body;
    if (c == Pair<S>::minus_one()) return swapped.empty() ? "neg(" + body + ")" : swapped;
    return format_pair(c) + (body_is_unit ? "" : body);
}

template <Semiring S>
std::string format_wedge(const Wedge<S>& u) {
    if (u.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : u) {
        if (!out.empty()) out += " + ";
        const std::string swapped = k.size() >= 2 ? format_wedge_key(k, true) : "";
        out += format_term<S>(format_wedge_key(k), k.empty(), c, swapped);
    }
    return out;
}

template <Semiring S>
std::string format_mixed(const MixedElement<S>& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : e) {
        if (!out.empty()) out += " + ";
        out += format_term<S>(format_mixed_word(w), w.empty(), c, "");
    }
    return out;
}

}  // namespace exsys
