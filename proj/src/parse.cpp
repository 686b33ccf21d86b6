#include "polars/parse.hpp"

#include <cctype>

namespace polars {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial run() {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        Polynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        if (pos_ >= text_.size()) throw ParseError(what + " (end of input)", pos_);
        throw ParseError(what, pos_);
    }

    Polynomial expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected exponent");
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 4) throw ParseError("exponent too large", start);
            b = pow(b, static_cast<unsigned>(std::stoul(digits)));
        }
        return b;
    }

    Polynomial base() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected operand");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail(std::string("unexpected '") + c + "'");
    }

    Polynomial number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Integer num(std::string(text_.substr(start, pos_ - start)), 10);
        Integer den = 1;
        // A '/' directly followed by digits is part of the literal.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            den = Integer(std::string(text_.substr(dstart, pos_ - dstart)), 10);
            if (den == 0) throw ParseError("zero denominator", dstart);
        }
        return Polynomial::constant(make_rational(num, den));
    }

    Polynomial identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view id = text_.substr(start, pos_ - start);
        if (id == "X0") return Polynomial::variable(0);
        if (id == "X1" || id == "x") return Polynomial::variable(1);
        if (id == "X2" || id == "y") return Polynomial::variable(2);
        throw ParseError("unknown identifier '" + std::string(id) + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text) { return Parser(text).run(); }

}  // namespace polars
