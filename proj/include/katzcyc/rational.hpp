#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace katzcyc {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational times_integer(const Rational& q, long k) { return q * k; }
inline Rational inverse(const Rational& q) {
    if (is_zero(q)) throw std::domain_error("division by zero");
    return 1 / q;
}

inline Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

/// C(n, k) for 0 <= k <= n, zero otherwise.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// v_p of a nonzero integer.
inline std::int64_t padic_valuation(const Integer& a, unsigned long p) {
    if (sgn(a) == 0) throw std::domain_error("p-adic valuation of zero");
    Integer rest;
    Integer prime(p);
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
}

/// v_p of a nonzero rational.
inline std::int64_t padic_valuation(const Rational& q, unsigned long p) {
    return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace katzcyc
