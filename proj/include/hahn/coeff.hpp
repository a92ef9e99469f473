#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hahn/common.hpp"

namespace hahn {

/// Which localization a coefficient lives in: Z_(2) or Z_(3).
enum class LocalTag { x2, y3 };

std::string_view to_string(LocalTag tag);

/// Exact element of Z_(2) or Z_(3), always in lowest terms with a positive
/// denominator. Zero is stored as 0/1.
class Coeff {
public:
    Coeff() = default;  // 0 in Z_(2)

    /// Reduces num/den and enforces the localization; throws
    /// DenominatorNotInLocalization or ZeroDivision.
    static Coeff make(const mpz_class& num, const mpz_class& den, LocalTag tag);
    static Coeff integer(long n, LocalTag tag) { return make(n, 1, tag); }

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    LocalTag tag() const { return tag_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }
    mpq_class value() const { return mpq_class(num_, den_); }

    Coeff operator-() const;
    friend Coeff operator+(const Coeff& a, const Coeff& b);
    friend Coeff operator-(const Coeff& a, const Coeff& b);
    /// Integer multiple; the localization is closed under it.
    Coeff scaled(const mpz_class& k) const;
    Coeff abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact rational comparison. Throws TagMismatch across localizations.
    friend std::strong_ordering operator<=>(const Coeff& a, const Coeff& b);
    friend bool operator==(const Coeff& a, const Coeff& b) = default;

    /// True iff this = r·b for some b in the same localization.
    bool divisible_by(Divisor r) const;

    /// Canonical literal: `num` or `num/den`.
    std::string str() const;

private:
    Coeff(mpz_class num, mpz_class den, LocalTag tag)
        : num_(std::move(num)), den_(std::move(den)), tag_(tag) {}

    mpz_class num_{0};
    mpz_class den_{1};
    LocalTag tag_{LocalTag::x2};
};

inline Coeff coeff_make(const mpz_class& num, const mpz_class& den, LocalTag tag) {
    return Coeff::make(num, den, tag);
}
inline Coeff coeff_add(const Coeff& a, const Coeff& b) { return a + b; }
inline Coeff coeff_neg(const Coeff& a) { return -a; }
inline std::strong_ordering coeff_cmp(const Coeff& a, const Coeff& b) { return a <=> b; }
inline bool coeff_divisible(const Coeff& a, Divisor r) { return a.divisible_by(r); }

/// Returns c with 0 < c < hi and c - a ∈ r·L, where L is a's localization.
/// Requires hi > 0 and a ∉ r·L. Deterministic: the step r/3^k (Z_(2)) or
/// r/2^k (Z_(3)) is shrunk until it drops below hi, then a is reduced
/// modulo the step.
Coeff coeff_coset_witness(const Coeff& a, Divisor r, const Coeff& hi);

/// Parses `num` or `num/den` (optional leading sign) into the given
/// localization.
Coeff parse_coeff(std::string_view text, LocalTag tag);

}  // namespace hahn
