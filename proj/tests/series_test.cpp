#include <doctest.h>

#include <map>

#include "hahn/prestel.hpp"
#include "hahn/sampling.hpp"
#include "hahn/series.hpp"
#include "support.hpp"

using namespace hahn;

namespace {

Series s(std::string_view text) { return parse_series(text); }
GroupElement e(std::string_view text) { return parse_element(text); }
Series mono(std::string_view exponent) { return Series::monomial(e(exponent), Scalar::rational(1)); }

// Schoolbook product keyed by the printed exponent.
std::map<std::string, Scalar> naive_product(const Series& a, const Series& b) {
    std::map<std::string, Scalar> out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            const std::string key = (ea + eb).str();
            auto it = out.find(key);
            if (it == out.end()) out.emplace(key, ca * cb);
            else it->second = it->second + ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

TEST_CASE("series literals") {
    CHECK(s("t^(1@G2.0.x)").str() == "t^(1@G2.0.x)");
    CHECK(s("3/2*t^(2@G1.0.y0) + 1").str() == "1 + 3/2*t^(2@G1.0.y0)");
    CHECK(s("-t^(-1@G1.0.y0)").str() == "-t^(-1@G1.0.y0)");
    CHECK(s("0").is_zero());
    const Series g = s("(1/2+1/3 i)*t^(1@G2.0.x)");
    CHECK(g.field() == ResidueField::qi);
    CHECK(s(g.str()) == g);
    CHECK(kind_of([] { (void)s("t^(1@G2.0.x"); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([] { (void)s("2 2"); }) == ErrorKind::SyntaxError);
}

TEST_CASE("group-ring arithmetic") {
    CHECK(mono("1@G2.0.x") * mono("2@G1.0.y0") == mono("1@G2.0.x + 2@G1.0.y0"));
    const Series one = Series::one(ResidueField::q);
    const Series tg = mono("1@G2.0.x");
    CHECK((one + tg) * (one - tg) == one - mono("2@G2.0.x"));
    CHECK(s_neg(tg) + tg == Series(ResidueField::q));
    CHECK(s_add(tg, tg) == s("2*t^(1@G2.0.x)"));
    CHECK(tg.pow(3) == mono("3@G2.0.x"));
    CHECK(kind_of([&] { (void)(tg + tg.promoted()); }) == ErrorKind::TagMismatch);
}

TEST_CASE("products match schoolbook convolution and the leading-term rule") {
    const SampleRng root(31);
    for (std::uint64_t i = 0; i < 500; ++i) {
        SampleRng rng = root.split(i);
        const ResidueField field = rng.coin() ? ResidueField::q : ResidueField::qi;
        const Series a = sample::series(rng, field);
        const Series b = sample::series(rng, field);
        const Series ab = s_mul(a, b);
        const auto expected = naive_product(a, b);
        REQUIRE(expected.size() == ab.terms().size());
        for (const auto& [ex, c] : ab.terms()) {
            auto it = expected.find(ex.str());
            REQUIRE(it != expected.end());
            CHECK(it->second == c);
        }
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(ab.terms().front().first == a.terms().front().first + b.terms().front().first);
            CHECK(ab.terms().front().second == a.terms().front().second * b.terms().front().second);
        }
    }
}

TEST_CASE("val and w_val") {
    CHECK(val(mono("1@G2.0.x") + mono("1@G1.0.y0")) == ExtValue::of(e("1@G1.0.y0")));
    CHECK(val(mono("-1@G1.0.y0") + mono("1@G1.0.y0")) == ExtValue::of(e("-1@G1.0.y0")));
    CHECK(w_val(mono("-1@G1.0.y0")) == ExtValue::of(GroupElement()));
    CHECK(w_val(mono("-1@G2.0.x + 3@G1.0.x")) == ExtValue::of(e("-1@G2.0.x")));
    CHECK(val(Series(ResidueField::q)).is_infinity());
    CHECK(w_val(Series(ResidueField::q)).is_infinity());
    CHECK(ExtValue::of(e("100@G2.9.x")) < ExtValue::infinity());
    CHECK(val(Series(ResidueField::q)).str() == "inf");
}

TEST_CASE("valuation rings") {
    CHECK(in_O(mono("-1@G1.0.y0"), ValuationKind::w));
    CHECK_FALSE(in_O(mono("-1@G1.0.y0"), ValuationKind::v));
    CHECK_FALSE(in_O(mono("-1@G2.0.x"), ValuationKind::w));
    CHECK_FALSE(in_O(mono("-1@G2.0.x"), ValuationKind::v));
    CHECK(in_O(Series::one(ResidueField::q), ValuationKind::v));
    CHECK(in_O(Series::one(ResidueField::q), ValuationKind::w));
    CHECK(in_O(Series(ResidueField::q), ValuationKind::v));
}

TEST_CASE("residue_w") {
    CHECK(residue_w(s("t^(1@G2.0.x) + 3*t^(2@G1.0.y0)")) == s("3*t^(2@G1.0.y0)"));
    CHECK(residue_w(Series::one(ResidueField::q)) == Series::one(ResidueField::q));
    CHECK(residue_w(mono("1@G2.1.y")).is_zero());
    CHECK(kind_of([] { (void)residue_w(mono("-1@G2.0.x")); }) == ErrorKind::NotInValuationRing);
}

TEST_CASE("s_inverse examples") {
    const Series tg = mono("2@G2.0.x + 1@G1.1.y2");
    CHECK(s_inverse(tg, 0) == mono("-2@G2.0.x - 1@G1.1.y2"));
    CHECK(s_inverse(tg, 5) * tg == Series::one(ResidueField::q));
    const Series a = Series::one(ResidueField::q) + mono("1@G2.0.x");
    // (1 + t^γ)(1 - t^γ + t^{2γ}) - 1 = t^{3γ}
    CHECK(a * s_inverse(a, 2) - Series::one(ResidueField::q) == mono("3@G2.0.x"));
    CHECK(kind_of([] { (void)s_inverse(Series(ResidueField::q), 1); }) == ErrorKind::ZeroDivision);
    const Series g = s("(0/1+2/1 i)");
    CHECK(s_inverse(g, 0) * g == Series::one(ResidueField::qi));
}

TEST_CASE("s_inverse residual threshold") {
    const SampleRng root(32);
    for (std::uint64_t i = 0; i < 200; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series(rng, rng.coin() ? ResidueField::q : ResidueField::qi);
        if (a.is_zero()) continue;
        const UnitDecomposition u = decompose_unit(a);
        for (unsigned n = 0; n <= 3; ++n) {
            const Series residual = a * s_inverse(a, n) - Series::one(a.field());
            if (u.epsilon.is_zero()) {
                CHECK(residual.is_zero());
                continue;
            }
            const GroupElement threshold = val(u.epsilon).element().scaled(n + 1);
            for (const auto& [ex, c] : residual.terms()) CHECK(ex >= threshold);
        }
    }
}

TEST_CASE("field embeddings") {
    CHECK(apply_field_embedding(FieldEmbedding::f, mono("-1@G1.0.y0")) == mono("-1@G2.0.y"));
    CHECK(apply_field_embedding(FieldEmbedding::g, mono("-1@G2.0.x")) == mono("-1@G1.0.x"));
    CHECK(parse_field_embedding("f") == FieldEmbedding::f);
    CHECK(parse_field_embedding("g") == FieldEmbedding::g);
    CHECK(kind_of([] { (void)parse_field_embedding("f3"); }) == ErrorKind::Precondition);
    const SampleRng root(33);
    for (std::uint64_t i = 0; i < 300; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series(rng, ResidueField::q);
        const Series b = sample::series(rng, ResidueField::q);
        for (const auto id : {FieldEmbedding::f, FieldEmbedding::g}) {
            CHECK(apply_field_embedding(id, a * b) == apply_field_embedding(id, a) * apply_field_embedding(id, b));
            CHECK(apply_field_embedding(id, a + b) == apply_field_embedding(id, a) + apply_field_embedding(id, b));
        }
    }
}

TEST_CASE("valuation axioms and coarsening on samples") {
    const SampleRng root(34);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series(rng, ResidueField::q);
        const Series b = sample::series(rng, ResidueField::q);
        CHECK(val(a * b) == val(a) + val(b));
        CHECK(w_val(a * b) == w_val(a) + w_val(b));
        const ExtValue lo = std::min(val(a), val(b));
        CHECK(val(a + b) >= lo);
        if (val(a) != val(b)) CHECK(val(a + b) == lo);
        const ExtValue wlo = std::min(w_val(a), w_val(b));
        CHECK(w_val(a + b) >= wlo);
        if (w_val(a) != w_val(b)) CHECK(w_val(a + b) == wlo);
        if (in_O(a, ValuationKind::v)) CHECK(in_O(a, ValuationKind::w));
    }
}

TEST_CASE("residue_w is a ring homomorphism on 𝒪_w") {
    const SampleRng root(35);
    for (std::uint64_t i = 0; i < 500; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series_in_Ow(rng, ResidueField::q);
        const Series b = sample::series_in_Ow(rng, ResidueField::q);
        REQUIRE(in_O(a, ValuationKind::w));
        CHECK(residue_w(a + b) == residue_w(a) + residue_w(b));
        CHECK(residue_w(a * b) == residue_w(a) * residue_w(b));
    }
}

TEST_CASE("prestel reports") {
    const PrestelReport f = prestel_report(FieldEmbedding::f, 1000, 7);
    CHECK_FALSE(f.forward.holds);
    REQUIRE(f.forward.witness);
    CHECK(*f.forward.witness == mono("-1@G1.0.y0"));
    CHECK(in_O(*f.forward.witness, ValuationKind::w));
    CHECK_FALSE(in_O(apply_field_embedding(FieldEmbedding::f, *f.forward.witness), ValuationKind::w));
    CHECK(f.backward.holds);

    const PrestelReport g = prestel_report(FieldEmbedding::g, 1000, 7);
    CHECK(g.forward.holds);
    CHECK_FALSE(g.backward.holds);
    REQUIRE(g.backward.witness);
    CHECK(*g.backward.witness == mono("-1@G2.0.x"));
    CHECK_FALSE(in_O(*g.backward.witness, ValuationKind::w));
    CHECK(in_O(apply_field_embedding(FieldEmbedding::g, *g.backward.witness), ValuationKind::w));

    CHECK(kind_of([] { (void)prestel_report(FieldEmbedding::f, 0, 7); }) == ErrorKind::Precondition);

    const auto j = f.to_json();
    CHECK(j["embedding"] == "f");
    CHECK(j["samples"] == 1000);
    CHECK(j["seed"] == "7");
    CHECK(j["forward"]["status"] == "fails");
    CHECK(j["forward"]["witness"] == "t^(-1@G1.0.y0)");
    CHECK(j["backward"]["status"] == "holds-on-samples");
    CHECK(j.dump() == prestel_report(FieldEmbedding::f, 1000, 7).to_json().dump());
}

TEST_CASE("scalars") {
    const Scalar a = Scalar::gaussian(1, 2);
    CHECK(a * a.inverse() == Scalar::one(ResidueField::qi));
    CHECK(Scalar::rational(3, 4).str() == "3/4");
    CHECK(kind_of([] { (void)Scalar().inverse(); }) == ErrorKind::ZeroDivision);
    CHECK(kind_of([] { (void)(Scalar::rational(1) + Scalar::gaussian(1, 0)); }) == ErrorKind::TagMismatch);
}
