#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hahn/embedding.hpp"
#include "hahn/group.hpp"
#include "hahn/scalar.hpp"

namespace hahn {

/// A value-group element or +∞ (the value of 0), with ∞ above everything.
class ExtValue {
public:
    static ExtValue infinity() { return ExtValue(); }
    static ExtValue of(GroupElement g) { return ExtValue(std::move(g)); }

    bool is_infinity() const { return !finite_.has_value(); }
    /// Requires a finite value.
    const GroupElement& element() const;

    friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
    friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);
    friend bool operator==(const ExtValue& a, const ExtValue& b) = default;

    std::string str() const { return finite_ ? finite_->str() : "inf"; }

private:
    ExtValue() = default;
    explicit ExtValue(GroupElement g) : finite_(std::move(g)) {}

    std::optional<GroupElement> finite_;
};

/// Finite-support element of k((Γ)) = k((Γ₁))((Γ₂)): the group ring k[Γ].
///
/// Terms are sorted by increasing exponent, all scalars are nonzero and from
/// the series' residue field.
class Series {
public:
    using Term = std::pair<GroupElement, Scalar>;

    explicit Series(ResidueField field = ResidueField::q) : field_(field) {}

    static Series monomial(const GroupElement& exponent, const Scalar& c);
    static Series constant(const Scalar& c) { return monomial(GroupElement(), c); }
    static Series one(ResidueField field) { return constant(Scalar::one(field)); }
    /// Repeated exponents are summed; zero scalars dropped.
    static Series from_terms(ResidueField field, std::vector<Term> terms);

    ResidueField field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Same series over ℚ(i).
    Series promoted() const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series pow(unsigned n) const;

    friend bool operator==(const Series& a, const Series& b) = default;

    /// Canonical literal: terms `c*t^(<element>)` joined by ` + `, with unit
    /// scalars and zero exponents elided; `0` for the zero series.
    std::string str() const;

private:
    ResidueField field_;
    std::vector<Term> terms_;
};

inline Series s_add(const Series& a, const Series& b) { return a + b; }
inline Series s_neg(const Series& a) { return -a; }
inline Series s_mul(const Series& a, const Series& b) { return a * b; }

/// v: least exponent (∞ for 0).
ExtValue val(const Series& a);
/// w: image of v in Γ/Γ₁ ≅ Γ₂, i.e. v with its Γ₁ support dropped.
ExtValue w_val(const Series& a);

enum class ValuationKind { v, w };

/// a ∈ 𝒪_v resp. a ∈ 𝒪_w.
bool in_O(const Series& a, ValuationKind kind);

/// Image of a in the residue field k((Γ₁)) of w: the terms with zero
/// Γ₂-part. Throws NotInValuationRing when w(a) < 0.
Series residue_w(const Series& a);

/// Truncated inverse c⁻¹·t^(−γ)·Σ_{i≤iterations} (−ε)^i of a = c·t^γ·(1 + ε).
/// Every term of a·result − 1 has value at least (iterations+1)·v(ε).
/// Throws ZeroDivision for a = 0.
Series s_inverse(const Series& a, unsigned iterations);

/// Writes a = c·t^γ·(1 + ε) with v(ε) > 0.
struct UnitDecomposition {
    Scalar lead;
    GroupElement shift;
    Series epsilon;
};
UnitDecomposition decompose_unit(const Series& a);

/// The two field self-embeddings: identity on k, f3 resp. g3 on exponents.
enum class FieldEmbedding { f, g };

std::string_view to_string(FieldEmbedding id);
FieldEmbedding parse_field_embedding(std::string_view text);
inline EmbeddingId exponent_map(FieldEmbedding id) {
    return id == FieldEmbedding::f ? EmbeddingId::f3 : EmbeddingId::g3;
}

Series apply_field_embedding(FieldEmbedding id, const Series& a);

/// `0` or terms `scalar*t^(<element>)` joined by `+`/`-`; a scalar alone is a
/// constant term and `t^(…)` alone has scalar 1. A parenthesized scalar
/// `(a/b+c/d i)` puts the series over ℚ(i).
Series parse_series(std::string_view text);

}  // namespace hahn
