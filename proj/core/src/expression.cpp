#include "haantjes/expression.hpp"

#include <cctype>

namespace haantjes {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Context& ctx) : text_(text), ctx_(ctx) {}

    Scalar parse() {
        Scalar value = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Scalar expr() {
        Scalar value = term();
        for (;;) {
            if (accept('+')) {
                value = value + term();
            } else if (accept('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    Scalar term() {
        Scalar value = unary();
        for (;;) {
            if (accept('*')) {
                value = value * unary();
            } else if (accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                value = value / d;
            } else {
                return value;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (!accept('^')) return base;
        long exponent = 0;
        if (accept('(')) {
            const bool negative = accept('-');
            exponent = integer();
            if (negative) exponent = -exponent;
            expect(')');
        } else {
            exponent = integer();
        }
        if (exponent < 0 && base.is_zero()) fail("negative power of zero");
        return base.pow(static_cast<int>(exponent));
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        const auto digits = text_.substr(start, pos_ - start);
        if (digits.size() > 4) fail("exponent too large");
        return std::stol(std::string(digits));
    }

    Scalar atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar::constant(ctx_, Rational(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "sqrt") {
                expect('(');
                const std::size_t arg_pos = pos_;
                Scalar arg = expr();
                expect(')');
                if (arg.has_radical() || !arg.rational_part().is_polynomial()) {
                    throw ParseError("sqrt argument must be a polynomial", arg_pos);
                }
                const Polynomial& p = arg.rational_part().numerator();
                if (p.is_zero()) return Scalar(ctx_);
                if (auto root = p.exact_sqrt()) return Scalar(*root);
                return Scalar::sqrt_of(p);
            }
            if (!ctx_->find(name)) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Scalar::variable(ctx_, name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const Context& ctx_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar parse_expression(std::string_view text, const Context& ctx) { return Parser(text, ctx).parse(); }

std::string print_expression(const Scalar& value) { return value.to_string(); }

} // namespace haantjes
