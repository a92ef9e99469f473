#include "hahn/prestel.hpp"

#include "hahn/error.hpp"
#include "hahn/sampling.hpp"

namespace hahn {

namespace {

nlohmann::json direction_json(const DirectionResult& d) {
    nlohmann::json j;
    j["status"] = d.holds ? "holds-on-samples" : "fails";
    if (d.witness) {
        j["witness"] = d.witness->str();
        j["image"] = d.image->str();
        j["witness_in_Ow"] = in_O(*d.witness, ValuationKind::w);
        j["image_in_Ow"] = in_O(*d.image, ValuationKind::w);
    }
    return j;
}

void record(DirectionResult& d, bool ok, const Series& x, const Series& image) {
    if (ok || !d.holds) return;
    d.holds = false;
    d.witness = x;
    d.image = image;
}

}  // namespace

nlohmann::json PrestelReport::to_json() const {
    nlohmann::json j;
    j["embedding"] = std::string(to_string(embedding));
    j["samples"] = samples;
    j["seed"] = std::to_string(seed);
    j["forward"] = direction_json(forward);
    j["backward"] = direction_json(backward);
    return j;
}

Series curated_gamma1_unit() {
    return Series::monomial(
        GroupElement::monomial(IndexPoint::g1y(0, 0), Coeff::integer(-1, LocalTag::y3)),
        Scalar::rational(1));
}

Series curated_gamma2_pole() {
    return Series::monomial(
        GroupElement::monomial(IndexPoint::g2x(0), Coeff::integer(-1, LocalTag::x2)),
        Scalar::rational(1));
}

PrestelReport prestel_report(FieldEmbedding id, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorKind::Precondition, "prestel report needs samples >= 1");
    PrestelReport report{id, samples, seed, {}, {}};

    auto evaluate = [&](const Series& x) {
        const Series image = apply_field_embedding(id, x);
        const bool x_in = in_O(x, ValuationKind::w);
        const bool image_in = in_O(image, ValuationKind::w);
        record(report.forward, !x_in || image_in, x, image);
        record(report.backward, !image_in || x_in, x, image);
    };

    evaluate(curated_gamma1_unit());
    evaluate(curated_gamma2_pole());
    const SampleRng root(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        SampleRng rng = root.split(i);
        evaluate(sample::series(rng, ResidueField::q));
    }
    return report;
}

}  // namespace hahn
