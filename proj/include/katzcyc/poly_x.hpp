#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "katzcyc/polynomial.hpp"
#include "katzcyc/rings.hpp"

namespace katzcyc {

/// R[X] with the derivation extended by d(X) = 1.
///
/// Elements are Polynomial<R::element_type>.  The base ring's variable and
/// X never mix: specialization (see katz.hpp) is the only bridge back to R.
template <DifferentialRing R>
class PolyXRing {
public:
    using base_element = typename R::element_type;
    using element_type = Polynomial<base_element>;

    explicit PolyXRing(R base, std::string x_name = "X") : base_(std::move(base)), x_name_(std::move(x_name)) {}

    const R& base() const noexcept { return base_; }
    const std::string& variable_name() const noexcept { return x_name_; }
    unsigned long characteristic() const { return base_.characteristic(); }
    bool is_field() const noexcept { return false; }

    element_type embed(const base_element& a) const { return element_type(a); }
    element_type zero() const { return {}; }
    element_type one() const { return embed(base_.one()); }
    element_type from_integer(long k) const { return embed(base_.from_integer(k)); }
    element_type from_rational(const Rational& q) const { return embed(base_.from_rational(q)); }
    element_type variable_element() const { return element_type::monomial(base_.one(), 1); }
    /// sum q_k X^k mapped from a universal Q[X] polynomial.
    element_type from_rational_polynomial(const RationalPolynomial& p) const {
        return p.map([this](const Rational& q) { return base_.from_rational(q); });
    }

    element_type derive(const element_type& a) const {
        std::vector<base_element> out(a.size());
        const auto& c = a.coefficients();
        for (std::size_t k = 0; k < c.size(); ++k) {
            out[k] = out[k] + base_.derive(c[k]);
            if (k > 0) out[k - 1] = out[k - 1] + times_integer(c[k], static_cast<long>(k));
        }
        return element_type(std::move(out));
    }

    bool is_zero(const element_type& a) const noexcept { return a.is_zero(); }
    bool is_unit(const element_type& a) const { return a.degree() == 0 && base_.is_unit(a[0]); }
    bool is_constant(const element_type& a) const { return derive(a).is_zero(); }
    std::optional<element_type> unit_inverse(const element_type& a) const {
        if (a.degree() != 0) return std::nullopt;
        auto inv = base_.unit_inverse(a[0]);
        if (!inv) return std::nullopt;
        return embed(*inv);
    }
    std::optional<element_type> exact_quotient(const element_type& a, const element_type& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (auto inv = unit_inverse(b)) return a * *inv;
        return std::nullopt;
    }
    std::optional<element_type> distinguished() const { return variable_element(); }

    std::string to_string(const element_type& a) const {
        return format_polynomial<base_element>(a, x_name_, [this](const base_element& c) { return base_.to_string(c); });
    }

private:
    R base_;
    std::string x_name_;
};

/// Q[X] with d = d/dX; the home of the universal base-change tables.
class RationalPolynomialRing {
public:
    using element_type = RationalPolynomial;

    explicit RationalPolynomialRing(std::string variable = "X") : var_(std::move(variable)) {}

    const std::string& variable_name() const noexcept { return var_; }
    unsigned long characteristic() const noexcept { return 0; }
    bool is_field() const noexcept { return false; }

    RationalPolynomial zero() const { return {}; }
    RationalPolynomial one() const { return RationalPolynomial(Rational(1)); }
    RationalPolynomial from_integer(long k) const { return RationalPolynomial(Rational(k)); }
    RationalPolynomial from_rational(const Rational& q) const { return RationalPolynomial(q); }
    RationalPolynomial variable_element() const { return RationalPolynomial{Rational(0), Rational(1)}; }
    RationalPolynomial derive(const RationalPolynomial& a) const { return a.derivative(); }

    bool is_zero(const RationalPolynomial& a) const noexcept { return a.is_zero(); }
    bool is_unit(const RationalPolynomial& a) const noexcept { return a.degree() == 0; }
    bool is_constant(const RationalPolynomial& a) const noexcept { return a.degree() <= 0; }
    std::optional<RationalPolynomial> unit_inverse(const RationalPolynomial& a) const {
        if (a.degree() != 0) return std::nullopt;
        return RationalPolynomial(Rational(1) / a[0]);
    }
    std::optional<RationalPolynomial> exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) const {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }
    std::optional<RationalPolynomial> distinguished() const { return variable_element(); }
    std::string to_string(const RationalPolynomial& a) const { return format_polynomial(a, var_); }

private:
    std::string var_;
};

static_assert(DifferentialRing<RationalPolynomialRing>);
static_assert(DifferentialRing<PolyXRing<RationalFunctionField>>);

}  // namespace katzcyc
