#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hahn {

/// Residue-field stand-ins: ℚ and ℚ(√−1). Neither contains a cube root of 2.
enum class ResidueField { q, qi };

std::string_view to_string(ResidueField field);

/// Exact element of ℚ or ℚ(i).
class Scalar {
public:
    Scalar() = default;  // 0 in ℚ

    static Scalar rational(const mpq_class& value);
    static Scalar rational(long num, long den = 1) { return rational(mpq_class(num, den)); }
    static Scalar gaussian(const mpq_class& re, const mpq_class& im);
    static Scalar integer(long n, ResidueField field) {
        return field == ResidueField::q ? rational(n) : gaussian(n, 0);
    }
    static Scalar zero(ResidueField field) { return field == ResidueField::q ? Scalar() : gaussian(0, 0); }
    static Scalar one(ResidueField field) { return field == ResidueField::q ? rational(1) : gaussian(1, 0); }

    ResidueField field() const { return field_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    /// Same value viewed in ℚ(i).
    Scalar promoted() const { return gaussian(re_, im_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    /// Throws ZeroDivision on zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// `a/b` for ℚ, `(a/b+c/d i)` for ℚ(i).
    std::string str() const;

private:
    Scalar(mpq_class re, mpq_class im, ResidueField field)
        : re_(std::move(re)), im_(std::move(im)), field_(field) {}

    mpq_class re_{0};
    mpq_class im_{0};
    ResidueField field_{ResidueField::q};
};

}  // namespace hahn
