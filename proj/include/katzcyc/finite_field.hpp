#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "katzcyc/rational.hpp"

namespace katzcyc {

/// Arithmetic context of F_q, q = p^e, realised as F_p[g]/(m(g)) for the
/// lexicographically first monic irreducible m of degree e.
class FiniteFieldContext {
public:
    FiniteFieldContext(unsigned long p, unsigned e) : p_(p), e_(e) {
        if (!is_prime(p)) throw std::invalid_argument("finite field characteristic must be prime, got " + std::to_string(p));
        if (e < 1) throw std::invalid_argument("finite field degree must be >= 1");
        unsigned long q = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (q > (1ul << 20) / p) throw std::invalid_argument("finite field too large");
            q *= p;
        }
        q_ = q;
        modulus_ = find_irreducible();
    }

    unsigned long characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    unsigned long order() const noexcept { return q_; }
    /// Monic modulus, lowest coefficient first (length e + 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    std::uint64_t reduce(long k) const {
        const long m = k % static_cast<long>(p_);
        return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(p_) : m);
    }

    /// Product of two reduced digit vectors of length e.
    std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
        for (unsigned i = 0; i < e_; ++i)
            for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        for (unsigned k = 2 * e_ - 1; k-- > e_;) {
            const std::uint64_t c = prod[k];
            if (c == 0) continue;
            for (unsigned j = 0; j <= e_; ++j) prod[k - e_ + j] = (prod[k - e_ + j] + (p_ - c) * modulus_[j]) % p_;
        }
        prod.resize(e_);
        return prod;
    }

private:
    static std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& m,
                                               unsigned long p) {
        // m monic
        while (a.size() >= m.size()) {
            const std::uint64_t c = a.back();
            const std::size_t shift = a.size() - m.size();
            for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * m[j]) % p;
            a.pop_back();
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        return a;
    }

    // Trial division by every monic polynomial of degree 1..e/2.
    bool irreducible(const std::vector<std::uint64_t>& f) const {
        const unsigned deg = static_cast<unsigned>(f.size() - 1);
        for (unsigned d = 1; 2 * d <= deg; ++d) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<std::uint64_t> g(d + 1, 0);
                g[d] = 1;
                std::uint64_t v = idx;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = v % p_;
                    v /= p_;
                }
                if (poly_mod(f, g, p_).empty()) return false;
            }
        }
        return true;
    }

    std::vector<std::uint64_t> find_irreducible() const {
        for (std::uint64_t idx = 0; idx < q_; ++idx) {
            std::vector<std::uint64_t> f(e_ + 1, 0);
            f[e_] = 1;
            std::uint64_t v = idx;
            for (unsigned i = 0; i < e_; ++i) {
                f[i] = v % p_;
                v /= p_;
            }
            if (e_ == 1 || irreducible(f)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    unsigned long p_;
    unsigned e_;
    unsigned long q_ = 1;
    std::vector<std::uint64_t> modulus_;
};

/// Element of F_q.  A default-constructed value is zero with no context and
/// adopts the context of the first operand it meets.
class FqScalar {
public:
    FqScalar() = default;
    FqScalar(std::shared_ptr<const FiniteFieldContext> ctx, long k) : ctx_(std::move(ctx)) {
        digits_.assign(ctx_->degree(), 0);
        digits_[0] = ctx_->reduce(k);
    }
    FqScalar(std::shared_ptr<const FiniteFieldContext> ctx, std::vector<std::uint64_t> digits)
        : ctx_(std::move(ctx)), digits_(std::move(digits)) {
        digits_.resize(ctx_->degree(), 0);
        for (auto& d : digits_) d %= ctx_->characteristic();
    }

    /// The class of g, a generator of F_q over F_p (for e > 1).
    static FqScalar generator(std::shared_ptr<const FiniteFieldContext> ctx) {
        std::vector<std::uint64_t> d(ctx->degree(), 0);
        if (ctx->degree() == 1) {
            // g = root of the linear modulus g + m0
            d[0] = (ctx->characteristic() - ctx->modulus()[0]) % ctx->characteristic();
        } else {
            d[1] = 1;
        }
        return FqScalar(std::move(ctx), std::move(d));
    }

    bool is_zero() const noexcept {
        for (auto d : digits_)
            if (d != 0) return false;
        return true;
    }
    const std::shared_ptr<const FiniteFieldContext>& context() const noexcept { return ctx_; }
    /// Digits in F_p, lowest power of g first; empty for a context-free zero.
    const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }
    bool in_prime_field() const noexcept {
        for (std::size_t i = 1; i < digits_.size(); ++i)
            if (digits_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const FqScalar& a, const FqScalar& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.digits_ == b.digits_;
    }

    friend FqScalar operator+(const FqScalar& a, const FqScalar& b) {
        if (!a.ctx_) return b;
        if (!b.ctx_) return a;
        FqScalar r = a;
        const auto p = a.ctx_->characteristic();
        for (std::size_t i = 0; i < r.digits_.size(); ++i) r.digits_[i] = (r.digits_[i] + b.digits_[i]) % p;
        return r;
    }
    friend FqScalar operator-(const FqScalar& a) {
        if (!a.ctx_) return a;
        FqScalar r = a;
        const auto p = a.ctx_->characteristic();
        for (auto& d : r.digits_) d = (p - d) % p;
        return r;
    }
    friend FqScalar operator-(const FqScalar& a, const FqScalar& b) { return a + (-b); }
    friend FqScalar operator*(const FqScalar& a, const FqScalar& b) {
        if (!a.ctx_ || !b.ctx_) return {};
        return FqScalar(a.ctx_, a.ctx_->multiply(a.digits_, b.digits_));
    }

    FqScalar pow(std::uint64_t e) const {
        FqScalar base = *this;
        FqScalar acc(ctx_, 1);
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    FqScalar inverse() const {
        if (is_zero()) throw std::domain_error("F_q: inverse of zero");
        return pow(ctx_->order() - 2);
    }

    /// Integer literal for prime-field elements, otherwise a polynomial in g.
    std::string to_string(const std::string& gen = "g") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = digits_.size(); k-- > 0;) {
            const auto c = digits_[k];
            if (c == 0) continue;
            std::string mono = k == 0 ? "" : (k == 1 ? gen : gen + "^" + std::to_string(k));
            std::string term = mono.empty() ? std::to_string(c) : (c == 1 ? mono : std::to_string(c) + "*" + mono);
            out += out.empty() ? term : " + " + term;
        }
        return out;
    }

private:
    std::shared_ptr<const FiniteFieldContext> ctx_;
    std::vector<std::uint64_t> digits_;
};

inline bool is_zero(const FqScalar& a) noexcept { return a.is_zero(); }
inline FqScalar times_integer(const FqScalar& a, long k) {
    if (!a.context()) return a;
    return a * FqScalar(a.context(), k);
}
inline FqScalar inverse(const FqScalar& a) { return a.inverse(); }

}  // namespace katzcyc
