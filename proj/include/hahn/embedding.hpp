#pragma once

#include <string_view>

#include "hahn/group.hpp"

namespace hahn {

/// The self-embeddings of Γ and their factors.
///
///   f3 = f2 ⊕ f1 on Γ = (Γ₂ ⊕ Y) ⊕ Λ₁, where Y is the G1.0.y0 summand:
///     f1: Λ₁ ≅ Γ₁ closes the gap left by G1.0.y0;
///     f2: Γ₂ ≅ Λ₂ shifts G2 blocks up by one and sends Y onto G2.0.y.
///   g3 = g2 ⊕ g1 on Γ = Λ₂ ⊕ ((X ⊕ Y) ⊕ Γ₁), where X ⊕ Y is G2 block 0:
///     g2: Λ₂ ≅ Γ₂ shifts G2 blocks down by one;
///     g1 = g12 ⊕ g11 lands in Γ₁ as the final segment starting at G1.0.x,
///     with g12 placing X ⊕ Y on G1.0.x, G1.1.y0 and g11 shifting Γ₁ one
///     block up (block 0's Y-run also moves up one slot).
///
/// Each map sends a point to a point with the same label and is strictly
/// increasing, so coefficients travel unchanged.
enum class EmbeddingId { f1, f2, f3, g11, g12, g1, g2, g3 };

std::string_view to_string(EmbeddingId id);
EmbeddingId parse_embedding_id(std::string_view text);

bool in_domain(EmbeddingId id, const IndexPoint& p);

/// Throws OutOfDomain outside the embedding's index domain.
IndexPoint map_point(EmbeddingId id, const IndexPoint& p);

/// Carries every coefficient to the remapped point. Throws OutOfDomain if any
/// support point is outside the domain.
GroupElement apply_embedding(EmbeddingId id, const GroupElement& a);

}  // namespace hahn
