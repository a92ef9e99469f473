#pragma once

#include <cstdint>

#include "hahn/group.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// SplitMix64 stream. `split(i)` derives an independent child stream for
/// sample i, so sample i is the same no matter how samples are scheduled.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    SampleRng split(std::uint64_t index) const;

    /// Uniform on [lo, hi], unbiased.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

/// The fixed desk-scale distribution used by every property suite:
/// numerators in [-9, 9] \ {0}, denominators in [1, 9] admissible for the
/// localization, blocks and y-indices in [0, 3], support size in [0, 4].
namespace sample {

Coeff coeff(SampleRng& rng, LocalTag tag);
IndexPoint point(SampleRng& rng);
GroupElement element(SampleRng& rng);
/// Rejection-samples an element outside rΓ.
GroupElement nondivisible(SampleRng& rng, Divisor r);
/// An element x with F_6(x) = Γ₁, i.e. in the ∼₆-class of the definable k.
GroupElement in_class_of_k(SampleRng& rng);
/// Element supported on the given part only.
GroupElement element_in(SampleRng& rng, IndexPoint::Part part);

Scalar scalar(SampleRng& rng, ResidueField field);
/// 1 to 3 terms with sampled exponents and nonzero scalars.
Series series(SampleRng& rng, ResidueField field);
/// A series in 𝒪_w (w-value >= 0).
Series series_in_Ow(SampleRng& rng, ResidueField field);

}  // namespace sample

}  // namespace hahn
