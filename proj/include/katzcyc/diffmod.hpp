#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "katzcyc/matrix.hpp"
#include "katzcyc/poly_x.hpp"
#include "katzcyc/rings.hpp"

namespace katzcyc {

/// (n-1)! is not a unit of the coefficient ring.
class FactorialNotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A free module of rank n with connection matrix G1.  Row i of G1 holds the
/// coordinates of ∇(e_i); vectors are rows and ∇(f) = d(f) + f·G1.
template <DifferentialRing R>
class DifferentialModule {
public:
    using ring_type = R;
    using element_type = typename R::element_type;
    using vector_type = Row<element_type>;

    DifferentialModule(R ring, Matrix<element_type> g1) : ring_(std::move(ring)), g1_(std::move(g1)) {
        if (!g1_.is_square() || g1_.rows() == 0)
            throw std::invalid_argument("DifferentialModule: connection matrix must be square of size >= 1");
    }

    std::size_t rank() const noexcept { return g1_.rows(); }
    const R& ring() const noexcept { return ring_; }
    const Matrix<element_type>& connection() const noexcept { return g1_; }

    /// (n-1)! is a unit: always in characteristic 0, else iff p > n - 1.
    bool factorial_invertible() const {
        const unsigned long p = ring_.characteristic();
        return p == 0 || p > rank() - 1;
    }
    void require_factorial_invertible() const {
        if (!factorial_invertible())
            throw FactorialNotInvertible("(n-1)! = " + std::to_string(rank() - 1) + "! is not invertible in characteristic " +
                                         std::to_string(ring_.characteristic()));
    }

    vector_type basis_vector(std::size_t i) const {
        vector_type v(rank());
        v.at(i) = ring_.one();
        return v;
    }

    /// ∇ applied once.
    vector_type nabla(const vector_type& v) const {
        if (v.size() != rank()) throw std::invalid_argument("module element has wrong length");
        vector_type out = v * g1_;
        for (std::size_t j = 0; j < v.size(); ++j) out[j] = out[j] + ring_.derive(v[j]);
        return out;
    }

private:
    R ring_;
    Matrix<element_type> g1_;
};

template <DifferentialRing R>
Matrix<typename R::element_type> derive(const R& ring, const Matrix<typename R::element_type>& a) {
    return a.map([&ring](const auto& x) { return ring.derive(x); });
}

/// G_0 = Id, G_{s+1} = d(G_s) + G_s G_1 for s < s_max.
template <DifferentialRing R>
std::vector<Matrix<typename R::element_type>> iterated_matrices(const DifferentialModule<R>& m, std::size_t s_max) {
    const auto& ring = m.ring();
    std::vector<Matrix<typename R::element_type>> gs;
    gs.reserve(s_max + 1);
    gs.push_back(Matrix<typename R::element_type>::identity(m.rank(), ring.one()));
    for (std::size_t s = 0; s < s_max; ++s) gs.push_back(derive(ring, gs.back()) + gs.back() * m.connection());
    return gs;
}

/// ∇^k(v).
template <DifferentialRing R>
typename DifferentialModule<R>::vector_type apply_nabla(const DifferentialModule<R>& m,
                                                        typename DifferentialModule<R>::vector_type v, std::size_t k) {
    if (v.size() != m.rank()) throw std::invalid_argument("module element has wrong length");
    for (std::size_t i = 0; i < k; ++i) v = m.nabla(v);
    return v;
}

/// The family v, ∇v, ..., ∇^{count-1} v.
template <DifferentialRing R>
std::vector<typename DifferentialModule<R>::vector_type> nabla_orbit(const DifferentialModule<R>& m,
                                                                     typename DifferentialModule<R>::vector_type v,
                                                                     std::size_t count) {
    std::vector<typename DifferentialModule<R>::vector_type> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(v);
        if (i + 1 < count) v = m.nabla(v);
    }
    return out;
}

/// The same module over R[X] (d(X) = 1), where Katz's polynomial vector lives.
template <DifferentialRing R>
DifferentialModule<PolyXRing<R>> extend_scalars(const DifferentialModule<R>& m, std::string x_name = "X") {
    PolyXRing<R> rx(m.ring(), std::move(x_name));
    return DifferentialModule<PolyXRing<R>>(rx, m.connection().map([&rx](const auto& a) { return rx.embed(a); }));
}

/// (M, f∇) over (B, f d) for an invertible f.
template <DifferentialRing R>
DifferentialModule<R> rescale_derivation(const DifferentialModule<R>& m, const typename R::element_type& f) {
    if (!m.ring().unit_inverse(f)) throw std::domain_error("rescale_derivation: f is not invertible");
    return DifferentialModule<R>(m.ring().rescaled(f), f * m.connection());
}

/// Operator identity (f∇)^k = sum_i β_{k,i} ∇^i, as the lower-triangular
/// n×n matrix β (row k, column i), computed from ∇∘b = b∇ + d(b).
template <DifferentialRing R>
Matrix<typename R::element_type> rescaling_base_change(const R& ring, const typename R::element_type& f, std::size_t n) {
    using E = typename R::element_type;
    Matrix<E> beta(n, n);
    if (n == 0) return beta;
    beta(0, 0) = ring.one();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = 0; i <= k; ++i) {
            const E& b = beta(k, i);
            if (ring.is_zero(b)) continue;
            beta(k + 1, i) = beta(k + 1, i) + f * ring.derive(b);
            beta(k + 1, i + 1) = beta(k + 1, i + 1) + f * b;
        }
    return beta;
}

template <class E>
struct BasisCheck {
    E determinant;
    /// Nonzero determinant over a field; unit determinant over other rings.
    bool is_basis = false;
};

/// Determinant of the coordinate matrix of the given vectors.
template <DifferentialRing R>
BasisCheck<typename R::element_type> is_basis(const DifferentialModule<R>& m,
                                              const std::vector<typename DifferentialModule<R>::vector_type>& vectors) {
    if (vectors.size() != m.rank())
        throw std::invalid_argument("is_basis: expected " + std::to_string(m.rank()) + " vectors, got " +
                                    std::to_string(vectors.size()));
    const auto& ring = m.ring();
    auto det = determinant(Matrix<typename R::element_type>::from_rows(vectors), ring.one());
    const bool ok = ring.is_field() ? !ring.is_zero(det) : ring.is_unit(det);
    return {std::move(det), ok};
}

// ---------------------------------------------------------------------------

/// Outcome of the characteristic-p non-cyclicity harness on F_q[x]^n with the
/// trivial connection.
struct CounterexampleReport {
    unsigned long p = 0;
    unsigned e = 0;
    unsigned long q = 0;
    std::size_t n = 0;
    std::size_t degree_bound = 0;
    std::size_t monomials_checked = 0;
    std::size_t polynomials_checked = 0;
    bool derivative_power_vanishes = true;  // d^q(f) = 0 on every sample
    std::size_t vectors_checked = 0;
    std::size_t max_first_zero_index = 0;   // over vectors: first k with ∇^k v = 0
    bool zero_member_found = true;          // every family has ∇^k v = 0 for some k <= n-1
    bool determinants_vanish = true;
    std::vector<std::string> failures;

    bool confirmed() const { return derivative_power_vanishes && zero_member_found && determinants_vanish; }
    std::string conclusion() const {
        return confirmed() ? "no cyclic vector possible for these witnesses"
                           : "counterexample not confirmed on the sampled witnesses";
    }
};

/// Checks d^q = 0 on monomials x^m (m <= degree bound) and on sampled
/// polynomials, then that sampled families {v, ..., ∇^{n-1} v} contain a zero
/// vector and have zero determinant.  Requires n > q = p^e.
inline CounterexampleReport charp_counterexample(unsigned long p, unsigned e, std::size_t n) {
    FiniteFieldPolyRing ring(p, e);
    const unsigned long q = ring.order();
    if (n <= q)
        throw std::invalid_argument("counterexample requires n > q = p^e (n = " + std::to_string(n) +
                                    ", q = " + std::to_string(q) + ")");
    CounterexampleReport rep;
    rep.p = p;
    rep.e = e;
    rep.q = q;
    rep.n = n;
    rep.degree_bound = std::max<std::size_t>(12, 4 * q);

    auto dq = [&ring, q](FqPolynomial f) {
        for (unsigned long i = 0; i < q; ++i) f = ring.derive(f);
        return f;
    };

    for (std::size_t m = 0; m <= rep.degree_bound; ++m) {
        const auto mono = FqPolynomial::monomial(ring.scalar(1), m);
        if (!dq(mono).is_zero()) {
            rep.derivative_power_vanishes = false;
            rep.failures.push_back("d^q(x^" + std::to_string(m) + ") != 0");
        }
        ++rep.monomials_checked;
    }

    std::mt19937_64 gen(0x5eed0000u + p * 131u + e * 17u + n);
    auto random_scalar = [&] {
        std::vector<std::uint64_t> digits(ring.degree());
        for (auto& dg : digits) dg = gen() % p;
        return FqScalar(ring.context(), std::move(digits));
    };
    auto random_poly = [&] {
        std::vector<FqScalar> c(rep.degree_bound + 1);
        for (auto& x : c) x = random_scalar();
        return FqPolynomial(std::move(c));
    };

    for (int i = 0; i < 16; ++i) {
        if (!dq(random_poly()).is_zero()) {
            rep.derivative_power_vanishes = false;
            rep.failures.push_back("d^q(f) != 0 for sampled polynomial #" + std::to_string(i));
        }
        ++rep.polynomials_checked;
    }

    DifferentialModule<FiniteFieldPolyRing> trivial(ring, Matrix<FqPolynomial>(n, n));
    for (int i = 0; i < 8; ++i) {
        Row<FqPolynomial> v(n);
        for (auto& x : v) x = random_poly();
        const auto family = nabla_orbit(trivial, v, n);
        std::size_t first_zero = n;
        for (std::size_t k = 0; k < n; ++k) {
            bool zero = true;
            for (const auto& x : family[k]) zero = zero && x.is_zero();
            if (zero) {
                first_zero = k;
                break;
            }
        }
        if (first_zero == n) {
            rep.zero_member_found = false;
            rep.failures.push_back("sampled vector #" + std::to_string(i) + " has no zero member");
        } else {
            rep.max_first_zero_index = std::max(rep.max_first_zero_index, first_zero);
        }
        if (!determinant(Matrix<FqPolynomial>::from_rows(family), ring.one()).is_zero()) {
            rep.determinants_vanish = false;
            rep.failures.push_back("sampled vector #" + std::to_string(i) + " has nonzero wedge");
        }
        ++rep.vectors_checked;
    }
    return rep;
}

}  // namespace katzcyc
