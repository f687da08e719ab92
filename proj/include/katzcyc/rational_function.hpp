#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "katzcyc/polynomial.hpp"
#include "katzcyc/rational.hpp"

namespace katzcyc {

/// Element of Q(x): numerator / denominator with monic, coprime denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    explicit RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit RationalFunction(RationalPolynomial num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(RationalPolynomial num, RationalPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    const RationalPolynomial& numerator() const noexcept { return num_; }
    const RationalPolynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return from_parts(a.num_ + b.num_, a.den_, !a.is_polynomial());
        if (a.is_polynomial()) return from_parts(a.num_ * b.den_ + b.num_, b.den_, false);
        if (b.is_polynomial()) return from_parts(a.num_ + b.num_ * a.den_, a.den_, false);
        const auto g = gcd(a.den_, b.den_);
        if (g.degree() == 0) return from_parts(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, false);
        const auto ab = divmod(a.den_, g).first;
        const auto bb = divmod(b.den_, g).first;
        auto num = a.num_ * bb + b.num_ * ab;
        auto den = ab * b.den_;
        if (num.is_zero()) return {};
        const auto h = gcd(num, g);
        if (h.degree() > 0) {
            num = divmod(num, h).first;
            den = divmod(den, h).first;
        }
        return from_parts(std::move(num), std::move(den), false);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) {
            // denominators are exactly 1
            return RationalFunction(a.num_ * b.num_);
        }
        auto an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        cancel(an, bd);
        cancel(bn, ad);
        return from_parts(an * bn, ad * bd, false);
    }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("Q(x): inverse of zero");
        return RationalFunction(den_, num_);
    }

    /// d/dx
    RationalFunction derivative() const {
        if (is_polynomial()) return RationalFunction(num_.derivative());
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational evaluate(const Rational& x) const { return num_.evaluate(x) / den_.evaluate(x); }

    std::string to_string(const std::string& var) const {
        const std::string n = format_polynomial(num_, var);
        if (is_polynomial()) return n;
        return "(" + n + ")/(" + format_polynomial(den_, var) + ")";
    }

private:
    static RationalFunction from_parts(RationalPolynomial num, RationalPolynomial den, bool reduce) {
        RationalFunction r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        if (reduce)
            r.normalize();
        else if (r.num_.is_zero())
            r.den_ = RationalPolynomial(Rational(1));
        else
            r.make_denominator_monic();
        return r;
    }

    static void cancel(RationalPolynomial& num, RationalPolynomial& den) {
        if (den.degree() == 0 || num.degree() == 0) return;
        const auto g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
    }

    void make_denominator_monic() {
        const Rational lead = den_.leading();
        if (lead != 1) {
            const Rational inv = 1 / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = RationalPolynomial(Rational(1));
            return;
        }
        if (den_.degree() > 0) {
            auto g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        make_denominator_monic();
    }

    RationalPolynomial num_;
    RationalPolynomial den_;
};

inline bool is_zero(const RationalFunction& a) noexcept { return a.is_zero(); }
inline RationalFunction times_integer(const RationalFunction& a, long k) {
    return a * RationalFunction(Rational(k));
}
inline RationalFunction inverse(const RationalFunction& a) { return a.inverse(); }

}  // namespace katzcyc
