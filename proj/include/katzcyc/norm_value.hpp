#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace katzcyc {

/// Exact value of an ultrametric norm that takes values in p^Z ∪ {0}.
///
/// Only the exponent is stored; the prime is a property of the ring the value
/// came from, so values from different rings must not be mixed.  Zero is the
/// exponent -infinity and compares below every other value.
class NormValue {
public:
    /// The value 0.
    constexpr NormValue() noexcept = default;

    static constexpr NormValue zero() noexcept { return {}; }
    static constexpr NormValue one() noexcept { return power(0); }
    static constexpr NormValue power(std::int64_t k) noexcept {
        NormValue v;
        v.exponent_ = k;
        return v;
    }

    constexpr bool is_zero() const noexcept { return exponent_ == kZero; }

    /// Exponent k of p^k.  Must not be called on zero.
    std::int64_t exponent() const {
        if (is_zero()) throw std::domain_error("NormValue: zero has no finite exponent");
        return exponent_;
    }

    friend constexpr bool operator==(const NormValue&, const NormValue&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) noexcept {
        return a.exponent_ <=> b.exponent_;
    }

    friend constexpr NormValue operator*(const NormValue& a, const NormValue& b) noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        return power(a.exponent_ + b.exponent_);
    }
    NormValue& operator*=(const NormValue& b) noexcept { return *this = *this * b; }

    friend NormValue operator/(const NormValue& a, const NormValue& b) {
        if (b.is_zero()) throw std::domain_error("NormValue: division by zero norm");
        if (a.is_zero()) return zero();
        return power(a.exponent_ - b.exponent_);
    }

    NormValue inverse() const { return one() / *this; }

    /// Integer powers; negative powers of zero are an error, 0^0 = 1.
    NormValue pow(std::int64_t e) const {
        if (e == 0) return one();
        if (is_zero()) {
            if (e < 0) throw std::domain_error("NormValue: negative power of zero");
            return zero();
        }
        return power(exponent_ * e);
    }

    /// Renders as "p^k" (or "0"), the exact serialization used in reports.
    std::string to_string(unsigned long p) const {
        if (is_zero()) return "0";
        return std::to_string(p) + "^" + std::to_string(exponent_);
    }

    /// Double approximation for human-facing diagnostics only.
    double approx(unsigned long p) const;

private:
    static constexpr std::int64_t kZero = std::numeric_limits<std::int64_t>::min();
    std::int64_t exponent_ = kZero;
};

inline double NormValue::approx(unsigned long p) const {
    if (is_zero()) return 0.0;
    double r = 1.0;
    const double base = exponent_ >= 0 ? double(p) : 1.0 / double(p);
    for (std::int64_t i = 0, e = exponent_ >= 0 ? exponent_ : -exponent_; i < e; ++i) r *= base;
    return r;
}

inline NormValue max(const NormValue& a, const NormValue& b) noexcept { return std::max(a, b); }
inline NormValue min(const NormValue& a, const NormValue& b) noexcept { return std::min(a, b); }

inline std::ostream& operator<<(std::ostream& os, const NormValue& v) {
    if (v.is_zero()) return os << "0";
    return os << "p^" << v.exponent();
}

}  // namespace katzcyc
