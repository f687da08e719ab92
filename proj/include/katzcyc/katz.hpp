#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "katzcyc/diffmod.hpp"
#include "katzcyc/matrix.hpp"
#include "katzcyc/poly_x.hpp"
#include "katzcyc/polynomial.hpp"
#include "katzcyc/rational.hpp"
#include "katzcyc/rings.hpp"

namespace katzcyc {

namespace detail {
inline void check_table_indices(long s, long i, long j, long n) {
    if (n < 1) throw std::out_of_range("rank n must be >= 1");
    if (i < 0 || i > n - 1 || j < 0 || j > n - 1)
        throw std::out_of_range("row/column index out of range [0, n-1]");
    if (s < 0 || s > 2 * n - 2) throw std::out_of_range("s out of range [0, 2n-2]");
}
inline Integer sign_power(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }
}  // namespace detail

// ---------------------------------------------------------------------------
// Universal base-change tables.  Row i of H(X) = sum_s H_s(X) G_s gives the
// coordinates of ∇^i of the Katz vector; H_s has integer-multiple-of-X^m/m!
// entries independent of the module.

/// Support indicator: s in [0, n-1+i] and j in [max(0, i-s), min(n-1, n-1+i-s)].
inline bool epsilon(long s, long i, long j, long n) {
    detail::check_table_indices(s, i, j, n);
    if (s > n - 1 + i) return false;
    return j >= std::max(0L, i - s) && j <= std::min(n - 1, n - 1 + i - s);
}

/// Sum over k of (-1)^{s+k} C(s-k+j, j) C(i, k) on the support, 0 elsewhere.
inline Integer alpha(long s, long i, long j, long n) {
    if (!epsilon(s, i, j, n)) return 0;
    Integer acc = 0;
    for (long k = std::max(0L, s + j - (n - 1)); k <= std::min(i, s); ++k)
        acc += detail::sign_power(s + k) * binomial(s - k + j, j) * binomial(i, k);
    return acc;
}

/// The same sum spelled with (-1)^{s-k} and without the support factor.
inline Integer alpha_unmasked(long s, long i, long j, long n) {
    detail::check_table_indices(s, i, j, n);
    Integer acc = 0;
    for (long k = std::max(0L, s + j - (n - 1)); k <= std::min(i, s); ++k)
        acc += detail::sign_power(s - k) * binomial(s - k + j, j) * binomial(i, k);
    return acc;
}

/// h_{s;i,j}(X) = α(s;i,j) X^m / m!, m = s + j - i.
inline RationalPolynomial h_entry(long s, long i, long j, long n) {
    const Integer a = alpha(s, i, j, n);
    if (sgn(a) == 0) return {};
    const long m = s + j - i;
    return RationalPolynomial::monomial(Rational(a) / Rational(factorial(static_cast<unsigned long>(m))),
                                        static_cast<std::size_t>(m));
}

inline Matrix<RationalPolynomial> h_matrix(long s, long n) {
    if (n < 1) throw std::out_of_range("rank n must be >= 1");
    if (s < 0 || s > 2 * n - 2) throw std::out_of_range("s out of range [0, 2n-2]");
    Matrix<RationalPolynomial> h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h_entry(s, i, j, n);
    return h;
}

/// H_0, ..., H_{2n-2}.
inline std::vector<Matrix<RationalPolynomial>> h_matrices(long n) {
    std::vector<Matrix<RationalPolynomial>> out;
    for (long s = 0; s <= 2 * n - 2; ++s) out.push_back(h_matrix(s, n));
    return out;
}

/// Polynomial matrix evaluated at X := x (any algebra V receiving Q via embed).
template <class V, class Embed>
Matrix<V> evaluate_table(const Matrix<RationalPolynomial>& h, const V& x, Embed&& embed) {
    return h.map([&](const RationalPolynomial& p) { return p.evaluate(x, embed); });
}

// ---------------------------------------------------------------------------

/// Polynomial vector c(X) = sum_j c_j X^j with module-element coefficients.
template <class E>
struct PolynomialVector {
    std::vector<Row<E>> coefficients;  // coefficients[j] multiplies X^j

    std::size_t degree_bound() const noexcept { return coefficients.size(); }
    /// Coordinates as polynomials in X.
    Row<Polynomial<E>> coordinates(std::size_t n) const {
        Row<Polynomial<E>> out(n);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<E> c;
            c.reserve(coefficients.size());
            for (const auto& row : coefficients) c.push_back(row.at(k));
            out[k] = Polynomial<E>(std::move(c));
        }
        return out;
    }
};

/// c(e, X) = sum_j (X^j / j!) sum_{k<=j} (-1)^k C(j,k) ∇^k(e_{j-k}).
template <DifferentialRing R>
PolynomialVector<typename R::element_type> katz_vector(const DifferentialModule<R>& m) {
    using E = typename R::element_type;
    m.require_factorial_invertible();
    const std::size_t n = m.rank();
    const auto& ring = m.ring();
    const auto gs = iterated_matrices(m, n - 1);
    PolynomialVector<E> c;
    for (std::size_t j = 0; j < n; ++j) {
        Row<E> acc(n);
        for (std::size_t k = 0; k <= j; ++k) {
            const Rational coeff =
                Rational(detail::sign_power(static_cast<long>(k)) * binomial(static_cast<long>(j), static_cast<long>(k))) /
                Rational(factorial(j));
            const E scale = ring.from_rational(coeff);
            const Row<E> row = gs[k].row(j - k);
            for (std::size_t col = 0; col < n; ++col) acc[col] = acc[col] + scale * row[col];
        }
        c.coefficients.push_back(std::move(acc));
    }
    return c;
}

/// c_{i,j}: the X^j coefficient of ∇^i(c0),
/// sum_{k<=i} k! C(j+k, j) C(i, k) ∇^{i-k}(c0_{j+k}).
template <DifferentialRing R>
Row<typename R::element_type> derivative_coefficients(const DifferentialModule<R>& m,
                                                      const PolynomialVector<typename R::element_type>& c0,
                                                      std::size_t i, std::size_t j) {
    using E = typename R::element_type;
    const auto& ring = m.ring();
    const std::size_t n = m.rank();
    Row<E> acc(n);
    for (std::size_t k = 0; k <= i; ++k) {
        if (j + k >= c0.coefficients.size()) break;
        const Integer w = factorial(k) * binomial(static_cast<long>(j + k), static_cast<long>(j)) *
                          binomial(static_cast<long>(i), static_cast<long>(k));
        const E scale = ring.from_rational(Rational(w));
        const Row<E> v = apply_nabla(m, c0.coefficients[j + k], i - k);
        for (std::size_t col = 0; col < n; ++col) acc[col] = acc[col] + scale * v[col];
    }
    return acc;
}

/// Recovers c0 (degree <= n-1) from the constant terms c_{k,0} of ∇^k(c0):
/// c0_j = (1/j!) sum_{k<=j} (-1)^{j-k} C(j,k) ∇^{j-k}(c_{k,0}).
template <DifferentialRing R>
PolynomialVector<typename R::element_type> invert_coefficients(const DifferentialModule<R>& m,
                                                               const std::vector<Row<typename R::element_type>>& constant_terms) {
    using E = typename R::element_type;
    m.require_factorial_invertible();
    const std::size_t n = m.rank();
    if (constant_terms.size() != n)
        throw std::invalid_argument("invert_coefficients: expected n constant terms");
    const auto& ring = m.ring();
    PolynomialVector<E> c0;
    for (std::size_t j = 0; j < n; ++j) {
        Row<E> acc(n);
        for (std::size_t k = 0; k <= j; ++k) {
            const Rational coeff = Rational(detail::sign_power(static_cast<long>(j - k)) *
                                            binomial(static_cast<long>(j), static_cast<long>(k))) /
                                   Rational(factorial(j));
            const E scale = ring.from_rational(coeff);
            const Row<E> v = apply_nabla(m, constant_terms[k], j - k);
            for (std::size_t col = 0; col < n; ++col) acc[col] = acc[col] + scale * v[col];
        }
        c0.coefficients.push_back(std::move(acc));
    }
    return c0;
}

// ---------------------------------------------------------------------------

template <DifferentialRing R>
struct BaseChangeDecomposition {
    using element_type = typename R::element_type;
    using poly_type = Polynomial<element_type>;

    std::size_t n = 0;
    std::vector<Matrix<RationalPolynomial>> h;  // H_0 .. H_{2n-2}
    Matrix<poly_type> assembled;                // H(X) = sum_s H_s(X) G_s
    poly_type determinant;                      // P(X)

    /// r_0, ..., r_{n(n-1)} (zero-padded).
    std::vector<element_type> coefficients() const {
        std::vector<element_type> r(n * (n - 1) + 1);
        for (std::size_t s = 0; s < determinant.size() && s < r.size(); ++s) r[s] = determinant[s];
        return r;
    }
};

/// H(X) = sum_s H_s(X) G_s, assembled from the universal tables h.
template <DifferentialRing R>
Matrix<Polynomial<typename R::element_type>> assemble_base_change(const DifferentialModule<R>& m,
                                                                  const std::vector<Matrix<RationalPolynomial>>& h) {
    using E = typename R::element_type;
    m.require_factorial_invertible();
    const std::size_t n = m.rank();
    PolyXRing<R> rx(m.ring());
    const auto gs = iterated_matrices(m, 2 * n - 2);
    Matrix<Polynomial<E>> acc(n, n);
    for (std::size_t s = 0; s < gs.size(); ++s) {
        const auto hs = h[s].map([&rx](const RationalPolynomial& p) { return rx.from_rational_polynomial(p); });
        const auto g = gs[s].map([&rx](const E& a) { return rx.embed(a); });
        acc = acc + hs * g;
    }
    return acc;
}

template <DifferentialRing R>
Matrix<Polynomial<typename R::element_type>> assemble_base_change(const DifferentialModule<R>& m) {
    return assemble_base_change(m, h_matrices(static_cast<long>(m.rank())));
}

/// det H(X) over Q(x)[X]: each row is scaled into Q[x][X] by the lcm of its
/// denominators, so the expansion runs without gcds.
inline Polynomial<RationalFunction> cleared_determinant(const Matrix<Polynomial<RationalFunction>>& h) {
    const std::size_t n = h.rows();
    Matrix<Polynomial<RationalPolynomial>> cleared(n, n);
    RationalPolynomial scale(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        RationalPolynomial l(Rational(1));
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& c : h(i, j).coefficients())
                if (c.denominator().degree() > 0) l = divmod(l * c.denominator(), gcd(l, c.denominator())).first;
        for (std::size_t j = 0; j < n; ++j)
            cleared(i, j) = h(i, j).map([&l](const RationalFunction& c) {
                return divmod(l, c.denominator()).first * c.numerator();
            });
        scale = scale * l;
    }
    const auto det = determinant(cleared, Polynomial<RationalPolynomial>(RationalPolynomial(Rational(1))));
    return det.map([&scale](const RationalPolynomial& c) { return RationalFunction(c, scale); });
}

/// Assembles H(X) from the universal tables and G_0..G_{2n-2}; P = det H.
template <DifferentialRing R>
BaseChangeDecomposition<R> base_change(const DifferentialModule<R>& m) {
    m.require_factorial_invertible();
    PolyXRing<R> rx(m.ring());
    BaseChangeDecomposition<R> out;
    out.n = m.rank();
    out.h = h_matrices(static_cast<long>(out.n));
    out.assembled = assemble_base_change(m, out.h);
    if constexpr (std::is_same_v<R, RationalFunctionField>)
        out.determinant = cleared_determinant(out.assembled);
    else
        out.determinant = determinant(out.assembled, rx.one());
    return out;
}

// ---------------------------------------------------------------------------

/// The element a is not a constant of the derivation.
class NotAConstant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// t - a for a constant a, the value substituted for X.
template <DifferentialRing R>
typename R::element_type specialization_point(const R& ring, const typename R::element_type& a) {
    if (!ring.is_constant(a)) throw NotAConstant("specialize: " + ring.to_string(a) + " is not a constant (d(a) != 0)");
    const auto t = ring.distinguished();
    if (!t) throw UnsupportedOperation("specialize: ring has no element t with d(t) = 1");
    return *t - a;
}

/// p(X) at X := t - a.
template <DifferentialRing R>
typename R::element_type specialize(const R& ring, const Polynomial<typename R::element_type>& p,
                                    const typename R::element_type& a) {
    const auto x = specialization_point(ring, a);
    return p.evaluate(x);
}

template <DifferentialRing R>
Row<typename R::element_type> specialize(const R& ring, const PolynomialVector<typename R::element_type>& c,
                                         const typename R::element_type& a) {
    using E = typename R::element_type;
    const auto x = specialization_point(ring, a);
    Row<E> out;
    E power = ring.one();
    for (std::size_t j = 0; j < c.coefficients.size(); ++j) {
        const auto& row = c.coefficients[j];
        if (out.empty()) out.assign(row.size(), E{});
        for (std::size_t k = 0; k < row.size(); ++k) out[k] = out[k] + power * row[k];
        power = power * x;
    }
    return out;
}

template <DifferentialRing R>
Matrix<typename R::element_type> specialize(const R& ring, const Matrix<Polynomial<typename R::element_type>>& h,
                                            const typename R::element_type& a) {
    const auto x = specialization_point(ring, a);
    return h.map([&x](const auto& p) { return p.evaluate(x); });
}

/// prod_{i<j} (a_j - a_i).
inline Rational vandermonde_det(const std::vector<Rational>& constants) {
    Rational acc = 1;
    for (std::size_t j = 0; j < constants.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) acc *= constants[j] - constants[i];
    return acc;
}

template <class E>
struct CyclicSearchResult {
    std::size_t index = 0;  // position in the candidate list
    Rational constant;      // a
    Row<E> vector;          // c(e, t - a)
    E determinant;          // P(t - a)
    bool invertible = false;
};

/// Default candidate constants 0, 1, ..., n(n-1).
inline std::vector<Rational> default_candidates(std::size_t n) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= n * (n - 1); ++k) c.emplace_back(static_cast<long>(k));
    return c;
}

/// Searches the candidates in order for the first a with P(t - a) != 0 and
/// returns the specialized Katz vector.  Without explicit candidates the ring
/// must be a characteristic-0 field.
template <DifferentialRing R>
CyclicSearchResult<typename R::element_type> find_cyclic(const DifferentialModule<R>& m,
                                                         std::optional<std::vector<Rational>> candidates = std::nullopt) {
    const auto& ring = m.ring();
    const std::size_t n = m.rank();
    if (!candidates) {
        if (ring.characteristic() != 0 || !ring.is_field())
            throw UnsupportedOperation("find_cyclic: default candidates need a characteristic-0 field; supply constants");
        candidates = default_candidates(n);
    }
    const std::size_t needed = n * (n - 1) + 1;
    if (candidates->size() < needed)
        throw std::invalid_argument("find_cyclic: need at least n(n-1)+1 = " + std::to_string(needed) + " constants");
    for (std::size_t i = 0; i < candidates->size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if ((*candidates)[i] == (*candidates)[j])
                throw std::invalid_argument("find_cyclic: duplicate candidate " + (*candidates)[i].get_str());

    const auto bc = base_change(m);
    const auto c = katz_vector(m);
    for (std::size_t i = 0; i < candidates->size(); ++i) {
        const auto a = ring.from_rational((*candidates)[i]);
        auto det = specialize(ring, bc.determinant, a);
        if (ring.is_zero(det)) continue;
        CyclicSearchResult<typename R::element_type> out;
        out.index = i;
        out.constant = (*candidates)[i];
        out.vector = specialize(ring, c, a);
        out.invertible = ring.is_field() || ring.is_unit(det);
        out.determinant = std::move(det);
        return out;
    }
    if (ring.is_field() && ring.characteristic() == 0)
        throw std::logic_error("find_cyclic: internal consistency failure, P(t - a) vanished at all " +
                               std::to_string(candidates->size()) + " distinct constants");
    throw std::domain_error("find_cyclic: P(t - a) vanished at every supplied constant");
}

// ---------------------------------------------------------------------------

class NotABasis : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// b_0..b_{n-1} with ∇^n c = sum_k b_k ∇^k c, by Cramer's rule on the
/// division-free determinants followed by one exact division each.
template <DifferentialRing R>
std::vector<typename R::element_type> companion_form(const DifferentialModule<R>& m,
                                                     const Row<typename R::element_type>& c) {
    using E = typename R::element_type;
    const auto& ring = m.ring();
    const std::size_t n = m.rank();
    auto family = nabla_orbit(m, c, n + 1);
    const Row<E> target = family.back();
    family.pop_back();
    const auto check = is_basis(m, family);
    if (!check.is_basis) throw NotABasis("companion_form: {c, ∇c, ..., ∇^{n-1}c} is not a basis");
    std::vector<E> b(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto replaced = family;
        replaced[k] = target;
        const E num = determinant(Matrix<E>::from_rows(replaced), ring.one());
        auto q = ring.exact_quotient(num, check.determinant);
        if (!q) throw std::domain_error("companion_form: coefficient b_" + std::to_string(k) + " is not in the ring");
        b[k] = std::move(*q);
    }
    return b;
}

/// ∇^n c - sum_k b_k ∇^k c (zero exactly when b is the companion form).
template <DifferentialRing R>
Row<typename R::element_type> companion_residual(const DifferentialModule<R>& m, const Row<typename R::element_type>& c,
                                                 const std::vector<typename R::element_type>& b) {
    const std::size_t n = m.rank();
    const auto family = nabla_orbit(m, c, n + 1);
    Row<typename R::element_type> res = family[n];
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t col = 0; col < n; ++col) res[col] = res[col] - b.at(k) * family[k][col];
    return res;
}

}  // namespace katzcyc
