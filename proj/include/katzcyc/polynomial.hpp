#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "katzcyc/rational.hpp"

namespace katzcyc {

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
    return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial with coefficients in C, lowest degree first.
///
/// C must be default-constructible to its zero and provide the ring
/// operators plus the free functions is_zero(C) and times_integer(C, long).
/// Division-based operations additionally need inverse(C).  The coefficient
/// vector never carries trailing zeros, so equality is structural.
template <class C>
class Polynomial {
public:
    using coefficient_type = C;

    Polynomial() = default;
    explicit Polynomial(C constant) {
        if (!detail::coeff_is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

    /// c * var^k
    static Polynomial monomial(C c, std::size_t k) {
        if (detail::coeff_is_zero(c)) return {};
        std::vector<C> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<C>& coefficients() const noexcept { return coeffs_; }

    /// Coefficient of var^k (zero beyond the degree).
    C operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C{}; }
    const C& leading() const {
        if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial& operator+=(const Polynomial& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + b.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - b.coeffs_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const C& c) const {
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (const auto& a : coeffs_) out.push_back(a * c);
        return Polynomial(std::move(out));
    }

    /// Formal derivative with respect to the polynomial variable.
    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<C> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = times_integer(coeffs_[k], static_cast<long>(k));
        return Polynomial(std::move(out));
    }

    /// Applies f to every coefficient.
    template <class F>
    auto map(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<D> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(f(c));
        return Polynomial<D>(std::move(out));
    }

    /// Horner evaluation at a point of any algebra V receiving C through embed.
    template <class V, class Embed>
    V evaluate(const V& x, Embed&& embed) const {
        V acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + embed(*it);
        return acc;
    }
    C evaluate(const C& x) const {
        return evaluate(x, [](const C& c) { return c; });
    }

    Polynomial compose(const Polynomial& inner) const {
        return evaluate(inner, [](const C& c) { return Polynomial(c); });
    }

private:
    void trim() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) noexcept {
    return p.is_zero();
}
template <class C>
Polynomial<C> times_integer(const Polynomial<C>& p, long k) {
    return p.map([k](const C& c) { return times_integer(c, k); });
}

/// Quotient and remainder; the divisor's leading coefficient must be invertible.
template <class C>
std::pair<Polynomial<C>, Polynomial<C>> divmod(const Polynomial<C>& a, const Polynomial<C>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial<C>{}, a};
    const C lead_inv = inverse(b.leading());
    std::vector<C> rem = a.coefficients();
    std::vector<C> quot(rem.size() - b.size() + 1);
    const auto& bc = b.coefficients();
    for (long k = static_cast<long>(rem.size()) - 1; k >= b.degree(); --k) {
        if (is_zero(rem[k])) continue;
        const C q = rem[k] * lead_inv;
        const std::size_t shift = static_cast<std::size_t>(k - b.degree());
        quot[shift] = q;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] = rem[shift + j] - q * bc[j];
    }
    return {Polynomial<C>(std::move(quot)), Polynomial<C>(std::move(rem))};
}

template <class C>
Polynomial<C> make_monic(const Polynomial<C>& p) {
    if (p.is_zero()) return p;
    return p.scaled(inverse(p.leading()));
}

/// Monic gcd over a coefficient field (gcd(0, 0) = 0).
template <class C>
Polynomial<C> gcd(Polynomial<C> a, Polynomial<C> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

/// Renders c_k * var^k terms in descending degree.  coeff_str returns the
/// canonical string of a coefficient; coefficients that are not a signed
/// literal or a bare identifier are parenthesized so the output re-parses.
template <class C>
std::string format_polynomial(const Polynomial<C>& p, const std::string& var,
                              const std::function<std::string(const C&)>& coeff_str) {
    if (p.is_zero()) return "0";
    auto is_simple = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            const char ch = s[i];
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '/' || ch == '_')) return false;
        }
        return true;
    };
    std::string out;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const C& c = p.coefficients()[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        std::string cs = coeff_str(c);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        bool negative = false;
        std::string body;
        if (is_simple(cs)) {
            if (cs[0] == '-') {
                negative = true;
                cs.erase(0, 1);
            }
            if (mono.empty())
                body = cs;
            else if (cs == "1")
                body = mono;
            else
                body = cs + "*" + mono;
        } else {
            body = mono.empty() ? "(" + cs + ")" : "(" + cs + ")*" + mono;
        }
        if (first)
            out = negative ? "-" + body : body;
        else
            out += negative ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

inline std::string format_polynomial(const Polynomial<Rational>& p, const std::string& var) {
    return format_polynomial<Rational>(p, var, [](const Rational& q) { return to_string(q); });
}

using RationalPolynomial = Polynomial<Rational>;

}  // namespace katzcyc
