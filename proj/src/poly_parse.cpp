#include "adlab/poly_parse.hpp"

#include <cctype>
#include <map>

namespace adlab {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), nvars_(static_cast<int>(vars.size())) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i].empty() || !(std::isalpha(static_cast<unsigned char>(vars[i][0]))))
                throw std::invalid_argument("invalid variable name '" + vars[i] + "'");
            if (!index_.emplace(vars[i], static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate variable name '" + vars[i] + "'");
        }
    }

    MultiPoly run() {
        MultiPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    MultiPoly parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        MultiPoly acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                MultiPoly t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                take();
                acc = acc * parse_factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        skip_ws();
        if (peek() == '^') {
            take();
            long e = parse_uint("exponent");
            return poly_pow(base, e);
        }
        return base;
    }

    MultiPoly parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            MultiPoly inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int_literal();
            skip_ws();
            if (peek() == '/') {
                take();
                std::size_t mark = pos_;
                Int den = parse_int_literal();
                if (den == 0) fail("zero denominator", mark);
                Rat q(num, den);
                q.canonicalize();
                return MultiPoly::constant(nvars_, q);
            }
            return MultiPoly::constant(nvars_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t mark = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            auto it = index_.find(name);
            if (it == index_.end()) fail("unknown identifier '" + name + "'", mark);
            return MultiPoly::variable(nvars_, it->second);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return MultiPoly(nvars_);  // unreachable
    }

    Int parse_int_literal() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer literal");
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        return Int(digits);
    }

    long parse_uint(const char* what) {
        skip_ws();
        std::size_t mark = pos_;
        Int v = parse_int_literal();
        if (v > 2147483647) fail(std::string(what) + " overflow (> 2^31-1)", mark);
        return v.get_si();
    }

    static MultiPoly poly_pow(const MultiPoly& base, long e) {
        MultiPoly acc = MultiPoly::constant(base.nvars(), Rat(1));
        MultiPoly b = base;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = (e >>= 1) > 0 ? b * b : b;
        }
        return acc;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, at);
    }

    const std::string& text_;
    int nvars_;
    std::map<std::string, int> index_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

}  // namespace adlab
