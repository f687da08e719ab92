#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "katzcyc/diffmod.hpp"
#include "katzcyc/katz.hpp"
#include "katzcyc/matrix.hpp"
#include "katzcyc/norm_value.hpp"
#include "katzcyc/rings.hpp"

namespace katzcyc {

/// Which matrix norm: the sup-norm, or the ρ-sup-norm sup |a_ij| ρ^(j-i).
/// A ρ-sup-norm with ρ = 1 is the sup-norm.
class MatrixNormKind {
public:
    static MatrixNormKind sup() { return MatrixNormKind(NormValue::one()); }
    static MatrixNormKind rho(NormValue r) {
        if (r.is_zero()) throw std::invalid_argument("rho-sup-norm requires rho > 0");
        return MatrixNormKind(r);
    }
    const NormValue& rho() const noexcept { return rho_; }
    bool is_sup() const noexcept { return rho_ == NormValue::one(); }

private:
    explicit MatrixNormKind(NormValue r) : rho_(r) {}
    NormValue rho_;
};

/// The three norms used by the certification criteria.
enum class NormChoice { Sup, RhoInverseT, RhoD };

inline std::string to_string(NormChoice c) {
    switch (c) {
        case NormChoice::Sup: return "sup";
        case NormChoice::RhoInverseT: return "rho-t";
        case NormChoice::RhoD: return "rho-d";
    }
    return "?";
}

template <BanachRing R>
NormValue distinguished_norm(const R& ring) {
    const auto t = ring.distinguished();
    if (!t) throw UnsupportedOperation("ring has no element t with d(t) = 1");
    return ring.norm(*t);
}

template <BanachRing R>
MatrixNormKind resolve_norm(const R& ring, NormChoice c) {
    switch (c) {
        case NormChoice::Sup: return MatrixNormKind::sup();
        case NormChoice::RhoInverseT: return MatrixNormKind::rho(distinguished_norm(ring).inverse());
        case NormChoice::RhoD: return MatrixNormKind::rho(ring.derivation_norm());
    }
    throw std::invalid_argument("unknown norm choice");
}

/// max_ij |a_ij| ρ^(j-i), exact.
template <BanachRing R>
NormValue matrix_norm(const R& ring, const Matrix<typename R::element_type>& a, const MatrixNormKind& kind) {
    NormValue best = NormValue::zero();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const NormValue v = ring.norm(a(i, j));
            if (v.is_zero()) continue;
            best = max(best, v * kind.rho().pow(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i)));
        }
    return best;
}

/// Exact ring constants the criteria are built from.
struct NormData {
    unsigned long p = 0;
    NormValue t;                      // |t|
    NormValue d;                      // |d|
    std::vector<NormValue> t_powers;  // |t^i|, i = 0..2n-2, via the element norm
    std::vector<NormValue> factorials;  // |i!|, i = 0..n-1
};

template <BanachRing R>
NormData norm_data(const R& ring, std::size_t n) {
    const auto t = ring.distinguished();
    if (!t) throw UnsupportedOperation("ring has no element t with d(t) = 1");
    NormData nd;
    nd.p = ring.prime();
    nd.t = ring.norm(*t);
    nd.d = ring.derivation_norm();
    auto power = ring.one();
    for (std::size_t i = 0; i + 1 < 2 * n || i == 0; ++i) {
        nd.t_powers.push_back(ring.norm(power));
        power = power * *t;
    }
    for (std::size_t i = 0; i < n; ++i) nd.factorials.push_back(ring.norm(ring.from_rational(Rational(factorial(i)))));
    return nd;
}

/// ‖G_1‖ max(‖G_1‖, |d|)^(s-1), the a-priori bound on ‖G_s‖.
inline NormValue lemma_2_2_bound(NormValue g1_norm, NormValue d_norm, long s) {
    if (s < 1) throw std::invalid_argument("lemma_2_2_bound: s must be >= 1");
    return g1_norm * max(g1_norm, d_norm).pow(s - 1);
}

/// Closed-form upper bounds on ‖H_0(±t)‖ and ‖H_s(t)‖ (index s = 0..2n-2,
/// entry 0 unused) in the norm attached to each criterion.
struct HNormBounds {
    NormValue h0;
    std::vector<NormValue> hs;
};

inline HNormBounds h_norm_bounds(std::size_t n, const NormData& nd, NormChoice choice) {
    HNormBounds b;
    const NormValue fact_last = nd.factorials.at(n - 1);
    const NormValue dt = nd.d * nd.t;
    switch (choice) {
        case NormChoice::Sup: {
            // ‖H_0(t)‖ = max_i |t^i| / |i!|, and every ‖H_s(t)‖ is at most that
            NormValue h0 = NormValue::zero();
            for (std::size_t i = 0; i < n; ++i) h0 = max(h0, nd.t_powers.at(i) / nd.factorials.at(i));
            b.h0 = h0;
            b.hs.assign(2 * n - 1, h0);
            break;
        }
        case NormChoice::RhoInverseT:
            b.h0 = fact_last.inverse();
            for (std::size_t s = 0; s + 1 < 2 * n || s == 0; ++s) b.hs.push_back(nd.t_powers.at(s) / fact_last);
            break;
        case NormChoice::RhoD:
            b.h0 = dt.pow(static_cast<std::int64_t>(n) - 1) / fact_last;
            for (std::size_t s = 0; s + 1 < 2 * n || s == 0; ++s)
                b.hs.push_back(nd.t_powers.at(s) * dt.pow(static_cast<std::int64_t>(n) - 1 - static_cast<std::int64_t>(s)) /
                               fact_last);
            break;
    }
    return b;
}

// ---------------------------------------------------------------------------

enum class Criterion { Prop23, Prop25, Prop28, Lemma21, FieldDeterminant };

inline std::string to_string(Criterion c) {
    switch (c) {
        case Criterion::Prop23: return "prop2.3";
        case Criterion::Prop25: return "prop2.5";
        case Criterion::Prop28: return "prop2.8";
        case Criterion::Lemma21: return "lemma2.1";
        case Criterion::FieldDeterminant: return "field-determinant";
    }
    return "?";
}

/// Result of one cyclicity criterion.  All values are exact; the verdict is
/// reproducible from the stored values alone (see recheck()).
template <class E>
struct CyclicityCertificate {
    Criterion criterion = Criterion::Prop23;
    NormChoice norm = NormChoice::Sup;
    unsigned long p = 0;
    NormValue g1;         // ‖G_1‖ in the criterion's norm
    NormValue t;          // |t|
    NormValue d;          // |d|
    NormValue factorial;  // |(n-1)!|
    NormValue bound;      // right-hand side of the strict inequality
    std::vector<NormValue> per_s;  // lemma 2.1: ‖H_0(-t) H_s(t) G_s‖, s = 1..2n-2
    bool determinant_nonzero = false;  // field-determinant criterion only
    bool certified = false;
    std::optional<Row<E>> witness;  // Katz vector c(e, t) when certified
    std::vector<std::string> diagnostics;

    /// Re-derives the verdict from the stored values.
    bool recheck() const {
        switch (criterion) {
            case Criterion::Lemma21: {
                for (const auto& v : per_s)
                    if (!(v < NormValue::one())) return false;
                return true;
            }
            case Criterion::FieldDeterminant: return determinant_nonzero;
            default: return g1 < bound;
        }
    }
};

namespace detail {

template <BanachRing R>
CyclicityCertificate<typename R::element_type> certificate_skeleton(const DifferentialModule<R>& m, Criterion c,
                                                                    NormChoice choice, const NormData& nd) {
    CyclicityCertificate<typename R::element_type> cert;
    cert.criterion = c;
    cert.norm = choice;
    cert.p = nd.p;
    cert.t = nd.t;
    cert.d = nd.d;
    cert.factorial = nd.factorials.at(m.rank() - 1);
    cert.g1 = matrix_norm(m.ring(), m.connection(), resolve_norm(m.ring(), choice));
    return cert;
}

template <BanachRing R>
void finish_strict(const DifferentialModule<R>& m, CyclicityCertificate<typename R::element_type>& cert) {
    cert.certified = cert.g1 < cert.bound;
    const auto p = cert.p;
    if (cert.g1 == cert.bound)
        cert.diagnostics.push_back("boundary: ‖G1‖ = bound = " + cert.bound.to_string(p) +
                                   "; the criterion needs strict inequality");
    if (cert.g1.is_zero())
        cert.diagnostics.push_back("‖G1‖ = 0");
    else
        cert.diagnostics.push_back("gap: bound / ‖G1‖ = " + (cert.bound / cert.g1).to_string(p));
    if (cert.certified) cert.witness = specialize(m.ring(), katz_vector(m), m.ring().zero());
}

}  // namespace detail

/// |G1|_sup < min_i(|i!| / |t^i|)^2 · min(1, |d|^-(2n-3)).
template <BanachRing R>
CyclicityCertificate<typename R::element_type> check_prop_2_3(const DifferentialModule<R>& m) {
    m.require_factorial_invertible();
    const std::size_t n = m.rank();
    const NormData nd = norm_data(m.ring(), n);
    auto cert = detail::certificate_skeleton(m, Criterion::Prop23, NormChoice::Sup, nd);
    NormValue h0_inverse = NormValue::one();
    for (std::size_t i = 0; i < n; ++i) h0_inverse = min(h0_inverse, nd.factorials[i] / nd.t_powers[i]);
    const NormValue d_factor = min(NormValue::one(), nd.d.pow(2 * static_cast<std::int64_t>(n) - 3).inverse());
    cert.bound = h0_inverse.pow(2) * d_factor;
    detail::finish_strict(m, cert);
    return cert;
}

namespace detail {
template <BanachRing R>
CyclicityCertificate<typename R::element_type> check_rho_criterion(const DifferentialModule<R>& m, Criterion c,
                                                                   NormChoice choice) {
    m.require_factorial_invertible();
    const std::size_t n = m.rank();
    const NormData nd = norm_data(m.ring(), n);
    auto cert = certificate_skeleton(m, c, choice, nd);
    // |(n-1)!|^2 |d| / (|d||t|)^(2n-2)
    cert.bound = cert.factorial.pow(2) * nd.d / (nd.d * nd.t).pow(2 * static_cast<std::int64_t>(n) - 2);
    finish_strict(m, cert);
    return cert;
}
}  // namespace detail

/// |G1|^(|t|^-1) < |(n-1)!|^2 |d| / (|d||t|)^(2n-2).
template <BanachRing R>
CyclicityCertificate<typename R::element_type> check_prop_2_5(const DifferentialModule<R>& m) {
    return detail::check_rho_criterion(m, Criterion::Prop25, NormChoice::RhoInverseT);
}

/// |G1|^(|d|) < |(n-1)!|^2 |d| / (|d||t|)^(2n-2).
template <BanachRing R>
CyclicityCertificate<typename R::element_type> check_prop_2_8(const DifferentialModule<R>& m) {
    return detail::check_rho_criterion(m, Criterion::Prop28, NormChoice::RhoD);
}

/// H_0(-t), the exact inverse of H_0(t).
template <DifferentialRing R>
Matrix<typename R::element_type> h0_inverse_at_t(const R& ring, std::size_t n) {
    const auto t = ring.distinguished();
    if (!t) throw UnsupportedOperation("ring has no element t with d(t) = 1");
    const auto minus_t = -*t;
    return evaluate_table(h_matrix(0, static_cast<long>(n)), minus_t,
                          [&ring](const Rational& q) { return ring.from_rational(q); });
}

/// The terms H_0(-t) H_s(t) G_s for s = 1..2n-2 (index 0 holds the identity).
template <DifferentialRing R>
std::vector<Matrix<typename R::element_type>> neumann_terms(const DifferentialModule<R>& m) {
    const auto& ring = m.ring();
    const std::size_t n = m.rank();
    const auto t = ring.distinguished();
    if (!t) throw UnsupportedOperation("ring has no element t with d(t) = 1");
    auto embed = [&ring](const Rational& q) { return ring.from_rational(q); };
    const auto h0_inv = h0_inverse_at_t(ring, n);
    const auto gs = iterated_matrices(m, 2 * n - 2);
    std::vector<Matrix<typename R::element_type>> out;
    out.push_back(Matrix<typename R::element_type>::identity(n, ring.one()));
    for (std::size_t s = 1; s < gs.size(); ++s)
        out.push_back(h0_inv * evaluate_table(h_matrix(static_cast<long>(s), static_cast<long>(n)), *t, embed) * gs[s]);
    return out;
}

/// ‖H_0(-t) H(t) - Id‖ with H(t) = sum_s H_s(t) G_s.
template <BanachRing R>
NormValue neumann_defect_norm(const DifferentialModule<R>& m, const MatrixNormKind& kind) {
    const auto terms = neumann_terms(m);
    Matrix<typename R::element_type> sum(m.rank(), m.rank());
    for (std::size_t s = 1; s < terms.size(); ++s) sum = sum + terms[s];
    return matrix_norm(m.ring(), sum, kind);
}

/// ‖H_0(-t) H_s(t) G_s‖ < 1 for every s = 1..2n-2, in the chosen norm.
template <BanachRing R>
CyclicityCertificate<typename R::element_type> certify_lemma_2_1(const DifferentialModule<R>& m,
                                                                 NormChoice choice = NormChoice::Sup) {
    m.require_factorial_invertible();
    const std::size_t n = m.rank();
    const NormData nd = norm_data(m.ring(), n);
    auto cert = detail::certificate_skeleton(m, Criterion::Lemma21, choice, nd);
    cert.bound = NormValue::one();
    const auto kind = resolve_norm(m.ring(), choice);
    const auto terms = neumann_terms(m);
    for (std::size_t s = 1; s < terms.size(); ++s) cert.per_s.push_back(matrix_norm(m.ring(), terms[s], kind));
    cert.certified = cert.recheck();
    for (std::size_t s = 0; s < cert.per_s.size(); ++s)
        if (cert.per_s[s] == NormValue::one())
            cert.diagnostics.push_back("boundary at s = " + std::to_string(s + 1) + ": norm equals 1");
    if (cert.certified) cert.witness = specialize(m.ring(), katz_vector(m), m.ring().zero());
    return cert;
}

/// Over a field: the Katz vector at a = 0 is cyclic iff P(t) != 0.
template <DifferentialRing R>
CyclicityCertificate<typename R::element_type> certify_field_determinant(const DifferentialModule<R>& m) {
    const auto& ring = m.ring();
    if (!ring.is_field()) throw UnsupportedOperation("field-determinant criterion needs a field");
    CyclicityCertificate<typename R::element_type> cert;
    cert.criterion = Criterion::FieldDeterminant;
    const auto zero = ring.zero();
    const auto det = specialize(ring, base_change(m).determinant, zero);
    cert.determinant_nonzero = !ring.is_zero(det);
    cert.certified = cert.determinant_nonzero;
    cert.diagnostics.push_back("P(t) = " + ring.to_string(det));
    if (cert.certified) cert.witness = specialize(ring, katz_vector(m), zero);
    return cert;
}

}  // namespace katzcyc
