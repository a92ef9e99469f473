#pragma once

#include <optional>
#include <utility>

#include "hahn/formula.hpp"

namespace hahn::logic {

/// The existential ring formula η(x) defining 𝒪_v for residue fields without
/// a cube root of 2. Its two inner blocks bind disjoint names: the first
/// uses y, z, y1, z1 and the second y_2, z_2, y1_2, z1_2.
FormulaPtr eta();

/// Witnesses for one (∃ y, z, y1, z1) block. A missing y1 (z1) asks for the
/// truncated inverse of y³ − 2 (z³ − 2) instead of an exact value.
struct EtaBlock {
    Series y;
    Series z;
    std::optional<Series> y1;
    std::optional<Series> z1;
};

/// Evaluates η's matrix at x and the supplied witnesses. Exactly given values
/// are compared exactly. A requested inverse is only known up to terms of
/// large value, so every atom mentioning one holds when its residual vanishes
/// up to the precision carried through the arithmetic; for y1·(y³ − 2) = 1
/// that bound is (iterations+1)·v(ε). Throws TagMismatch when the inputs mix
/// residue fields.
bool check_eta_witness(const Series& x, const std::pair<Series, Series>& ut, const EtaBlock& first,
                       const EtaBlock& second, unsigned iterations);

/// The L_oag formula for y ∈ F_r(x):
///   !(Ex z. !(z < 0) & (z <= r*y | z <= -r*y) & Div_r(z - x))
FormulaPtr fr_formula(Divisor r);

/// Decides a formula of the F_r membership shape (free variables x, y) via
/// lemma_rhs. Throws Precondition for any other formula and DivisibleElement
/// when x ∈ rΓ.
bool eval_fr_pattern(const FormulaPtr& f, const Assignment& a);

bool eval_fr_formula(const GroupElement& x, const GroupElement& y, Divisor r);

}  // namespace hahn::logic
