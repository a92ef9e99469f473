#include "hahn/sampling.hpp"

#include <limits>
#include <vector>

namespace hahn {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t SampleRng::next() {
    state_ += kGolden;
    return mix(state_);
}

SampleRng SampleRng::split(std::uint64_t index) const {
    return SampleRng(mix(state_ ^ mix(index + kGolden)));
}

std::int64_t SampleRng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return lo + static_cast<std::int64_t>(draw % range);
}

namespace sample {

namespace {

long nonzero_numerator(SampleRng& rng) {
    const long n = rng.uniform(1, 9);
    return rng.coin() ? -n : n;
}

}  // namespace

Coeff coeff(SampleRng& rng, LocalTag tag) {
    const long bad_prime = tag == LocalTag::x2 ? 2 : 3;
    const long num = nonzero_numerator(rng);
    long den = rng.uniform(1, 9);
    while (den % bad_prime == 0) den = rng.uniform(1, 9);
    return Coeff::make(num, den, tag);
}

IndexPoint point(SampleRng& rng) {
    const auto block = static_cast<std::uint64_t>(rng.uniform(0, 3));
    if (rng.coin()) return rng.coin() ? IndexPoint::g2x(block) : IndexPoint::g2y(block);
    if (rng.coin()) return IndexPoint::g1x(block);
    return IndexPoint::g1y(block, static_cast<std::uint64_t>(rng.uniform(0, 3)));
}

GroupElement element(SampleRng& rng) {
    const auto size = rng.uniform(0, 4);
    std::vector<GroupElement::Term> terms;
    for (std::int64_t i = 0; i < size; ++i) {
        const IndexPoint p = point(rng);
        terms.emplace_back(p, coeff(rng, tag_for(label(p))));
    }
    return GroupElement::from_terms(std::move(terms));
}

GroupElement nondivisible(SampleRng& rng, Divisor r) {
    GroupElement x = element(rng);
    while (divisible(x, r)) x = element(rng);
    return x;
}

GroupElement in_class_of_k(SampleRng& rng) {
    const IndexPoint k = definable_k();
    const GroupElement base = element(rng);
    std::vector<GroupElement::Term> terms;
    for (const auto& [p, c] : base.terms()) {
        if (p < k) terms.emplace_back(p, c.scaled(6));
        else if (p > k) terms.emplace_back(p, c);
    }
    Coeff at_k = coeff(rng, LocalTag::y3);
    while (at_k.divisible_by(Divisor::three)) at_k = coeff(rng, LocalTag::y3);
    terms.emplace_back(k, at_k);
    return GroupElement::from_terms(std::move(terms));
}

GroupElement element_in(SampleRng& rng, IndexPoint::Part part) {
    const auto size = rng.uniform(0, 4);
    std::vector<GroupElement::Term> terms;
    for (std::int64_t i = 0; i < size; ++i) {
        IndexPoint p = point(rng);
        while (p.part() != part) p = point(rng);
        terms.emplace_back(p, coeff(rng, tag_for(label(p))));
    }
    return GroupElement::from_terms(std::move(terms));
}

Scalar scalar(SampleRng& rng, ResidueField field) {
    const mpq_class re(nonzero_numerator(rng), rng.uniform(1, 9));
    if (field == ResidueField::q) return Scalar::rational(re);
    const mpq_class im(rng.uniform(-9, 9), rng.uniform(1, 9));
    return Scalar::gaussian(re, im);
}

Series series(SampleRng& rng, ResidueField field) {
    const auto size = rng.uniform(1, 3);
    std::vector<Series::Term> terms;
    for (std::int64_t i = 0; i < size; ++i) terms.emplace_back(element(rng), scalar(rng, field));
    return Series::from_terms(field, std::move(terms));
}

Series series_in_Ow(SampleRng& rng, ResidueField field) {
    Series s = series(rng, field);
    while (!in_O(s, ValuationKind::w)) s = series(rng, field);
    return s;
}

}  // namespace sample

}  // namespace hahn
