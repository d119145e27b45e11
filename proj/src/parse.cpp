#include "exsys/parse.hpp"

#include <cctype>

namespace exsys {

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse() {
        Expr e = sum();
        skip_space();
        if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    bool accept(char c) {
        skip_space();
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr node(Expr::Kind kind) const {
        Expr e;
        e.kind = kind;
        e.line = line_;
        e.column = col_;
        return e;
    }

    int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) fail("index too large");
            advance();
        }
        return static_cast<int>(v);
    }

    std::string scalar_text() {
        skip_space();
        std::string out;
        while (!at_end() && peek() != ',' && peek() != ']' && !std::isspace(static_cast<unsigned char>(peek()))) {
            out += peek();
            advance();
        }
        if (out.empty()) fail("expected a scalar");
        return out;
    }

    static Expr flatten(Expr e) {
        return e.args.size() == 1 ? std::move(e.args.front()) : std::move(e);
    }

    Expr sum() {
        Expr e = node(Expr::Kind::sum);
        e.args.push_back(term());
        while (accept('+')) e.args.push_back(term());
        return flatten(std::move(e));
    }

    Expr term() {
        skip_space();
        if (peek() != '[') return product();
        Expr c = node(Expr::Kind::coeff);
        advance();
        c.pos = scalar_text();
        expect(',');
        c.neg = scalar_text();
        expect(']');
        skip_space();
        if (accept('*') || starts_factor()) {
            c.args.push_back(product());
        } else {
            c.args.push_back(node(Expr::Kind::one));
        }
        return c;
    }

    bool starts_factor() {
        skip_space();
        const char c = peek();
        return c == 'x' || c == 'd' || c == 'n' || c == '(' || c == '1' || c == '0';
    }

    Expr product() {
        Expr e = node(Expr::Kind::product);
        e.args.push_back(wedge_chain());
        while (accept('*')) e.args.push_back(wedge_chain());
        return flatten(std::move(e));
    }

    Expr wedge_chain() {
        Expr e = node(Expr::Kind::wedge);
        e.args.push_back(atom());
        while (accept('^')) e.args.push_back(atom());
        if (e.args.size() > 1)
            for (const auto& a : e.args)
                if (a.kind == Expr::Kind::d) throw ParseError("dual letters cannot be wedged", a.line, a.column);
        return flatten(std::move(e));
    }

    Expr atom() {
        skip_space();
        const char c = peek();
        if (c == 'x' || c == 'd') {
            Expr e = node(c == 'x' ? Expr::Kind::x : Expr::Kind::d);
            advance();
            e.index = integer();
            return e;
        }
        if (c == '1') {
            Expr e = node(Expr::Kind::one);
            advance();
            if (std::isdigit(static_cast<unsigned char>(peek()))) fail("only the scalar 1 may appear bare");
            return e;
        }
        if (c == '0') {
            Expr e = node(Expr::Kind::zero);
            advance();
            if (std::isdigit(static_cast<unsigned char>(peek()))) fail("only the scalar 0 may appear bare");
            return e;
        }
        if (c == '(') {
            advance();
            Expr e = sum();
            expect(')');
            return e;
        }
        if (src_.substr(pos_, 3) == "neg") {
            Expr e = node(Expr::Kind::neg);
            for (int i = 0; i < 3; ++i) advance();
            expect('(');
            e.args.push_back(sum());
            expect(')');
            return e;
        }
        if (at_end()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

Expr parse_syntax(std::string_view src) { return Parser(src).parse(); }

std::string format_wedge_key(const WedgeKey& key, bool swap_first_two) {
    if (key.empty()) return "1";
    std::vector<int> order(key.begin(), key.end());
    if (swap_first_two && order.size() >= 2) std::swap(order[0], order[1]);
    std::string out;
    for (int e : order) {
        if (!out.empty()) out += '^';
        out += 'x' + std::to_string(e);
    }
    return out;
}

std::string format_mixed_word(const MixedWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += '*';
        out += (l.dual ? 'd' : 'x') + std::to_string(l.index);
    }
    return out;
}

}  // namespace exsys
