#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "katzcyc/finite_field.hpp"
#include "katzcyc/norm_value.hpp"
#include "katzcyc/polynomial.hpp"
#include "katzcyc/rational.hpp"
#include "katzcyc/rational_function.hpp"

namespace katzcyc {

/// Raised when an operation needs a capability the ring kind does not have
/// (a norm on a characteristic-p ring, a distinguished t after rescaling, ...).
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A commutative ring with exact arithmetic and a derivation d.
///
/// Elements are values: default construction gives zero, and the ring
/// operators plus == are exact.  Everything that needs ring data (the
/// derivation, literals, printing) goes through the ring object.
template <class R>
concept DifferentialRing = requires(const R& ring, const typename R::element_type& a, long k, const Rational& q) {
    typename R::element_type;
    { ring.zero() } -> std::same_as<typename R::element_type>;
    { ring.one() } -> std::same_as<typename R::element_type>;
    { ring.from_integer(k) } -> std::same_as<typename R::element_type>;
    { ring.from_rational(q) } -> std::same_as<typename R::element_type>;
    { ring.derive(a) } -> std::same_as<typename R::element_type>;
    { ring.is_zero(a) } -> std::same_as<bool>;
    { ring.is_unit(a) } -> std::same_as<bool>;
    { ring.is_constant(a) } -> std::same_as<bool>;
    { ring.unit_inverse(a) } -> std::same_as<std::optional<typename R::element_type>>;
    { ring.exact_quotient(a, a) } -> std::same_as<std::optional<typename R::element_type>>;
    { ring.distinguished() } -> std::same_as<std::optional<typename R::element_type>>;
    { ring.to_string(a) } -> std::same_as<std::string>;
    { ring.characteristic() } -> std::convertible_to<unsigned long>;
    { ring.is_field() } -> std::same_as<bool>;
    { a + a } -> std::convertible_to<typename R::element_type>;
    { a - a } -> std::convertible_to<typename R::element_type>;
    { a * a } -> std::convertible_to<typename R::element_type>;
    { -a } -> std::convertible_to<typename R::element_type>;
    { a == a } -> std::convertible_to<bool>;
};

/// A differential ring carrying an ultrametric norm valued in p^Z ∪ {0}.
template <class R>
concept BanachRing = DifferentialRing<R> && requires(const R& ring, const typename R::element_type& a) {
    { ring.norm(a) } -> std::same_as<NormValue>;
    { ring.derivation_norm() } -> std::same_as<NormValue>;
    { ring.prime() } -> std::convertible_to<unsigned long>;
};

namespace detail {
inline void require_unit_derivative(bool ok, const std::string& kind) {
    if (!ok) throw std::logic_error(kind + ": distinguished element does not satisfy d(t) = 1");
}
}  // namespace detail

// ---------------------------------------------------------------------------

/// Q(x) with d = f * d/dx (f = 1 unless rescaled).
class RationalFunctionField {
public:
    using element_type = RationalFunction;

    explicit RationalFunctionField(std::string variable = "x") : var_(std::move(variable)) {
        t_ = variable_element();
        detail::require_unit_derivative(derive(*t_) == one(), kind_name());
    }

    std::string kind_name() const { return "rational_function"; }
    const std::string& variable_name() const noexcept { return var_; }
    unsigned long characteristic() const noexcept { return 0; }
    bool is_field() const noexcept { return true; }
    const RationalFunction& derivation_scale() const noexcept { return scale_; }

    RationalFunction zero() const { return {}; }
    RationalFunction one() const { return RationalFunction(Rational(1)); }
    RationalFunction from_integer(long k) const { return RationalFunction(Rational(k)); }
    RationalFunction from_rational(const Rational& q) const { return RationalFunction(q); }
    RationalFunction variable_element() const { return RationalFunction(RationalPolynomial{Rational(0), Rational(1)}); }

    RationalFunction derive(const RationalFunction& a) const {
        if (scale_is_one_) return a.derivative();
        return scale_ * a.derivative();
    }

    bool is_zero(const RationalFunction& a) const noexcept { return a.is_zero(); }
    bool is_unit(const RationalFunction& a) const noexcept { return !a.is_zero(); }
    bool is_constant(const RationalFunction& a) const { return a.numerator().degree() <= 0 && a.is_polynomial(); }
    std::optional<RationalFunction> unit_inverse(const RationalFunction& a) const {
        if (a.is_zero()) return std::nullopt;
        return a.inverse();
    }
    std::optional<RationalFunction> exact_quotient(const RationalFunction& a, const RationalFunction& b) const {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return a * b.inverse();
    }

    std::optional<RationalFunction> distinguished() const { return t_; }
    std::string to_string(const RationalFunction& a) const { return a.to_string(var_); }

    /// Ring with derivation f * d.  The new distinguished element is an
    /// antiderivative of 1/(f * scale) when that is a polynomial, otherwise none.
    RationalFunctionField rescaled(const RationalFunction& f) const {
        if (f.is_zero()) throw std::domain_error("rescale_derivation: f is not invertible");
        RationalFunctionField r = *this;
        r.scale_ = scale_ * f;
        r.scale_is_one_ = r.scale_ == one();
        const RationalFunction inv = r.scale_.inverse();
        r.t_.reset();
        if (inv.is_polynomial()) {
            // termwise integration of a polynomial
            const auto& c = inv.numerator().coefficients();
            std::vector<Rational> out(c.size() + 1);
            for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / Rational(static_cast<long>(k + 1));
            r.t_ = RationalFunction(RationalPolynomial(std::move(out)));
            detail::require_unit_derivative(r.derive(*r.t_) == one(), kind_name());
        }
        return r;
    }

    friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) {
        return a.var_ == b.var_ && a.scale_ == b.scale_;
    }

private:
    std::string var_;
    RationalFunction scale_ = RationalFunction(Rational(1));
    bool scale_is_one_ = true;
    std::optional<RationalFunction> t_;
};

// ---------------------------------------------------------------------------

/// Q[y] with the radius-r Gauss norm |sum a_i y^i| = max |a_i|_p p^(-r i),
/// standing in for a Tate algebra.  d = c * d/dy for a nonzero rational c
/// (c = 1 unless rescaled), and t = y / c.
class GaussPolynomialRing {
public:
    using element_type = RationalPolynomial;

    GaussPolynomialRing(unsigned long p, long radius_exp, std::string variable = "t")
        : p_(p), r_(radius_exp), var_(std::move(variable)) {
        if (!is_prime(p)) throw std::invalid_argument("gauss_padic: p must be prime, got " + std::to_string(p));
        if (radius_exp < 0) throw std::invalid_argument("gauss_padic: radius exponent must be >= 0");
        validate();
    }

    std::string kind_name() const { return "gauss_padic"; }
    const std::string& variable_name() const noexcept { return var_; }
    unsigned long characteristic() const noexcept { return 0; }
    unsigned long prime() const noexcept { return p_; }
    long radius_exponent() const noexcept { return r_; }
    bool is_field() const noexcept { return false; }
    const Rational& derivation_scale() const noexcept { return scale_; }

    RationalPolynomial zero() const { return {}; }
    RationalPolynomial one() const { return RationalPolynomial(Rational(1)); }
    RationalPolynomial from_integer(long k) const { return RationalPolynomial(Rational(k)); }
    RationalPolynomial from_rational(const Rational& q) const { return RationalPolynomial(q); }
    RationalPolynomial variable_element() const { return RationalPolynomial{Rational(0), Rational(1)}; }

    RationalPolynomial derive(const RationalPolynomial& a) const {
        if (scale_ == 1) return a.derivative();
        return a.derivative().scaled(scale_);
    }

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

    std::optional<RationalPolynomial> distinguished() const {
        return variable_element().scaled(Rational(1) / scale_);
    }
    std::string to_string(const RationalPolynomial& a) const { return format_polynomial(a, var_); }

    /// Gauss norm, exact.
    NormValue norm(const RationalPolynomial& a) const {
        NormValue best = NormValue::zero();
        const auto& c = a.coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (sgn(c[i]) == 0) continue;
            best = max(best, NormValue::power(-padic_valuation(c[i], p_) - r_ * static_cast<long>(i)));
        }
        return best;
    }
    NormValue norm(const Rational& q) const {
        if (sgn(q) == 0) return NormValue::zero();
        return NormValue::power(-padic_valuation(q, p_));
    }

    /// Operator norm |d| = |c| p^r (attained on y^k with p not dividing k).
    NormValue derivation_norm() const { return norm(scale_) * NormValue::power(r_); }

    /// max |d(y^k)| / |y^k| over k = 0..count-1.
    NormValue sampled_derivation_norm(unsigned count) const {
        NormValue best = NormValue::zero();
        for (unsigned k = 0; k < count; ++k) {
            const auto mono = RationalPolynomial::monomial(Rational(1), k);
            best = max(best, norm(derive(mono)) / norm(mono));
        }
        return best;
    }

    /// Ring with derivation f * d; f must be a nonzero constant (the units).
    GaussPolynomialRing rescaled(const RationalPolynomial& f) const {
        if (f.degree() != 0) throw std::domain_error("rescale_derivation: f is not invertible");
        GaussPolynomialRing r = *this;
        r.scale_ = scale_ * f[0];
        r.validate();
        return r;
    }

    friend bool operator==(const GaussPolynomialRing& a, const GaussPolynomialRing& b) {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.var_ == b.var_ && a.scale_ == b.scale_;
    }

private:
    void validate() const {
        detail::require_unit_derivative(derive(*distinguished()) == one(), kind_name());
        if (sampled_derivation_norm(static_cast<unsigned>(2 * p_ + 2)) != derivation_norm())
            throw std::logic_error("gauss_padic: sampled derivation norm disagrees with closed form");
    }

    unsigned long p_;
    long r_;
    std::string var_;
    Rational scale_ = 1;
};

// ---------------------------------------------------------------------------

using FqPolynomial = Polynomial<FqScalar>;

/// F_q[x], q = p^e, with d = c * d/dx for a nonzero constant c.  Carries no norm.
class FiniteFieldPolyRing {
public:
    using element_type = FqPolynomial;

    FiniteFieldPolyRing(unsigned long p, unsigned e, std::string variable = "x")
        : ctx_(std::make_shared<const FiniteFieldContext>(p, e)), var_(std::move(variable)) {
        scale_ = FqScalar(ctx_, 1);
        detail::require_unit_derivative(derive(*distinguished()) == one(), kind_name());
    }

    std::string kind_name() const { return "finite_field_poly"; }
    const std::string& variable_name() const noexcept { return var_; }
    unsigned long characteristic() const noexcept { return ctx_->characteristic(); }
    unsigned long order() const noexcept { return ctx_->order(); }
    unsigned degree() const noexcept { return ctx_->degree(); }
    const std::shared_ptr<const FiniteFieldContext>& context() const noexcept { return ctx_; }
    bool is_field() const noexcept { return false; }

    FqScalar scalar(long k) const { return FqScalar(ctx_, k); }
    FqPolynomial zero() const { return {}; }
    FqPolynomial one() const { return FqPolynomial(scalar(1)); }
    FqPolynomial from_integer(long k) const { return FqPolynomial(scalar(k)); }
    FqPolynomial from_rational(const Rational& q) const {
        const Integer p(ctx_->characteristic());
        const Integer num = q.get_num() % p;
        const Integer den = q.get_den() % p;
        if (sgn(den) == 0) throw std::domain_error("F_q: denominator " + q.get_den().get_str() + " is not invertible");
        return FqPolynomial(scalar(num.get_si()) * scalar(den.get_si()).inverse());
    }
    FqPolynomial variable_element() const { return FqPolynomial::monomial(scalar(1), 1); }
    /// The generator g of F_q over F_p, only meaningful for e > 1.
    std::optional<FqPolynomial> generator() const {
        if (ctx_->degree() == 1) return std::nullopt;
        return FqPolynomial(FqScalar::generator(ctx_));
    }

    FqPolynomial derive(const FqPolynomial& a) const { return a.derivative().scaled(scale_); }

    bool is_zero(const FqPolynomial& a) const noexcept { return a.is_zero(); }
    bool is_unit(const FqPolynomial& a) const noexcept { return a.degree() == 0; }
    bool is_constant(const FqPolynomial& a) const { return derive(a).is_zero(); }
    std::optional<FqPolynomial> unit_inverse(const FqPolynomial& a) const {
        if (a.degree() != 0) return std::nullopt;
        return FqPolynomial(a[0].inverse());
    }
    std::optional<FqPolynomial> exact_quotient(const FqPolynomial& a, const FqPolynomial& b) const {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    std::optional<FqPolynomial> distinguished() const { return variable_element().scaled(scale_.inverse()); }
    std::string to_string(const FqPolynomial& a) const {
        return format_polynomial<FqScalar>(a, var_, [](const FqScalar& c) { return c.to_string("g"); });
    }

    FiniteFieldPolyRing rescaled(const FqPolynomial& f) const {
        if (f.degree() != 0) throw std::domain_error("rescale_derivation: f is not invertible");
        FiniteFieldPolyRing r = *this;
        r.scale_ = scale_ * f[0];
        return r;
    }

private:
    std::shared_ptr<const FiniteFieldContext> ctx_;
    std::string var_;
    FqScalar scale_;
};

static_assert(DifferentialRing<RationalFunctionField>);
static_assert(BanachRing<GaussPolynomialRing>);
static_assert(DifferentialRing<FiniteFieldPolyRing>);
static_assert(!BanachRing<FiniteFieldPolyRing>);

}  // namespace katzcyc
