#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "katzcyc/rational.hpp"
#include "katzcyc/rings.hpp"

namespace katzcyc {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// expr   := term (('+' | '-') term)*
// term   := unary (('*' | '/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' integer)?
// atom   := integer | identifier | '(' expr ')'
template <DifferentialRing R>
class ExpressionParser {
public:
    using E = typename R::element_type;

    ExpressionParser(std::string_view text, const R& ring) : text_(text), ring_(ring) {}

    E parse() {
        E value = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return value;
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

    E expr() {
        E acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    E term() {
        E acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                const E divisor = unary();
                if (ring_.is_zero(divisor)) throw ParseError("division by zero", at);
                if (ring_.is_field()) {
                    acc = *ring_.exact_quotient(acc, divisor);
                } else {
                    auto inv = ring_.unit_inverse(divisor);
                    if (!inv) throw ParseError("division by a non-unit in a polynomial ring", at);
                    acc = acc * *inv;
                }
            } else {
                return acc;
            }
        }
    }

    E unary() {
        if (accept('-')) return -unary();
        return power();
    }

    E power() {
        E base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", at);
        const Integer e = integer_literal();
        if (e > 4096) throw ParseError("exponent too large", at);
        unsigned long k = e.get_ui();
        E acc = ring_.one();
        while (k) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return acc;
    }

    E atom() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return ring_.from_rational(Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t at = pos_;
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            if (name == ring_.variable_name()) return ring_.variable_element();
            if constexpr (requires { ring_.generator(); }) {
                if (name == "g") {
                    if (auto g = ring_.generator()) return *g;
                }
            }
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        if (c == '(') {
            ++pos_;
            E inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Integer integer_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const R& ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an element in the grammar of integer literals, the ring variable,
/// + - * / ^ and parentheses.  Division needs a field or a unit divisor;
/// literals are reduced into the ring (mod p in characteristic p).
template <DifferentialRing R>
typename R::element_type parse_element(std::string_view text, const R& ring) {
    return detail::ExpressionParser<R>(text, ring).parse();
}

}  // namespace katzcyc
