#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hahn/series.hpp"

namespace hahn {

/// One inclusion direction for an embedding e: K → K.
///   forward:  x ∈ 𝒪_w ⇒ e(x) ∈ 𝒪_w
///   backward: e(x) ∈ 𝒪_w ⇒ x ∈ 𝒪_w
struct DirectionResult {
    bool holds = true;
    /// First counterexample in evaluation order (curated witnesses first).
    std::optional<Series> witness;
    std::optional<Series> image;
};

struct PrestelReport {
    FieldEmbedding embedding;
    std::uint64_t samples;
    std::uint64_t seed;
    DirectionResult forward;
    DirectionResult backward;

    /// Key-ordered: {backward, embedding, forward, samples, seed}; seed is a
    /// decimal string so all 64 bits survive JSON readers.
    nlohmann::json to_json() const;
};

/// t^(−1@G1.0.y0): in 𝒪_w with v-value below 0.
Series curated_gamma1_unit();
/// t^(−1@G2.0.x): outside 𝒪_w.
Series curated_gamma2_pole();

/// Evaluates both directions on the curated witnesses followed by `samples`
/// seeded random series. Throws Precondition when samples == 0.
PrestelReport prestel_report(FieldEmbedding id, std::uint64_t samples, std::uint64_t seed);

}  // namespace hahn
