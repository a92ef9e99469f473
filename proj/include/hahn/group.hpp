#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hahn/coeff.hpp"
#include "hahn/spine.hpp"

namespace hahn {

/// Finite-support element of the Hahn sum Γ = ⊕_{j∈J} G_j.
///
/// Terms are kept sorted by IndexPoint with nonzero coefficients whose
/// localization matches the label of their point, so structural equality is
/// group equality. Elements of Γ₁, Γ₂, Λ₁ and Λ₂ are the elements whose
/// support lies in the corresponding index subset.
class GroupElement {
public:
    using Term = std::pair<IndexPoint, Coeff>;

    GroupElement() = default;

    static GroupElement monomial(const IndexPoint& p, const Coeff& c);
    /// Accepts terms in any order; repeated points are summed, zeros dropped.
    static GroupElement from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1, 0 or 1 according to the leading (most significant) coefficient.
    int sign() const { return terms_.empty() ? 0 : terms_.front().second.sign(); }
    /// Requires a nonzero element.
    const IndexPoint& leading_point() const;

    /// Coefficient at p (zero in p's localization when p is off-support).
    Coeff at(const IndexPoint& p) const;

    GroupElement operator-() const;
    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    /// k·a for an integer k.
    GroupElement scaled(const mpz_class& k) const;
    GroupElement abs() const { return sign() < 0 ? -*this : *this; }

    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);
    friend bool operator==(const GroupElement& a, const GroupElement& b) = default;

    /// Canonical literal, e.g. `1@G2.0.y + -3/5@G1.2.y0`, or `0`.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

inline GroupElement g_add(const GroupElement& a, const GroupElement& b) { return a + b; }
inline GroupElement g_neg(const GroupElement& a) { return -a; }
inline std::strong_ordering g_cmp(const GroupElement& a, const GroupElement& b) { return a <=> b; }

/// a ∈ rΓ; rΓ is computed componentwise.
bool divisible(const GroupElement& a, Divisor r);

/// Least support point whose coefficient is not r-divisible.
/// Throws DivisibleElement when a ∈ rΓ.
IndexPoint leading_obstruction(const GroupElement& a, Divisor r);

/// F_r(a): the largest convex subgroup disjoint from a + rΓ, returned as the
/// final segment strictly above the leading obstruction.
Cut fr(const GroupElement& a, Divisor r);

struct LemmaResult {
    bool empty;
    /// Present iff !empty: some z with 0 <= z <= r|y| and z - x ∈ rΓ.
    std::optional<GroupElement> witness;
};

/// Decides whether [0, r·max(-y, y)] meets x + rΓ by building an explicit
/// coset element inside the interval or showing that none fits. Works from
/// the coefficients directly and never consults fr().
LemmaResult lemma_rhs(const GroupElement& x, const GroupElement& y, Divisor r);

/// F_r(a) = F_r(b).
bool sim_r(const GroupElement& a, const GroupElement& b, Divisor r);

/// Canonical representative of the ∼₆-class of the definable index k.
GroupElement gamma1_probe();

bool in_gamma1_direct(const GroupElement& y);
/// Membership in Γ₁ through the parameter-free definition: y ∈ F_6(x_k).
bool in_gamma1_definable(const GroupElement& y);

/// Image of a in Γ/C, represented by dropping the support inside the cut.
GroupElement project_quotient(const GroupElement& a, const Cut& c);

/// The cut whose quotient is Γ/Γ₁ ≅ Γ₂.
inline Cut gamma1_cut() { return Cut::above(definable_k()); }

/// `0` or `coeff@point` terms joined by `+` (a `-` separator negates the
/// next term). Whitespace is insignificant.
GroupElement parse_element(std::string_view text);

}  // namespace hahn
