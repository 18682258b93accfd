#include "ratrel/parser.hpp"

#include <cctype>

namespace ratrel {
namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    RationalFunction run() {
        RationalFunction value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (value.is_constant())
            raise("ConstantExpression", "no t survives reduction: '" + text_ + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        raise("SyntaxError", what + " at position " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    RationalFunction expression() {
        skip_space();
        bool negate = false;
        while (peek_is('+') || peek_is('-')) {
            if (consume('-')) negate = !negate;
            else consume('+');
        }
        RationalFunction acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (consume('+')) acc = acc + term();
            else if (consume('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    RationalFunction term() {
        RationalFunction acc = power();
        while (true) {
            if (consume('*')) acc = acc * power();
            else if (consume('/')) {
                RationalFunction d = power();
                if (d.is_zero()) raise("ZeroDenominator", "denominator simplifies to zero");
                acc = acc / d;
            } else if (peek_is('(')) {
                acc = acc * power(); // juxtaposition: t^3(t+1)
            } else {
                break;
            }
        }
        return acc;
    }

    RationalFunction power() {
        RationalFunction base = atom();
        while (consume('^')) {
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a nonnegative integer exponent");
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 1000) fail("exponent too large");
                ++pos_;
            }
            RationalFunction acc = RationalFunction::constant(Rational(1));
            for (unsigned long i = 0; i < e; ++i) acc = acc * base;
            base = acc;
        }
        return base;
    }

    RationalFunction atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expression();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') { // unary minus inside a factor, e.g. 2*-3
            ++pos_;
            return -power();
        }
        if (c == 't') {
            ++pos_;
            return RationalFunction::identity();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits.push_back(text_[pos_++]);
            return RationalFunction::constant(Rational(Integer(digits)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_ratfunc(const std::string& text) {
    Parser p(text);
    return p.run();
}

} // namespace ratrel
