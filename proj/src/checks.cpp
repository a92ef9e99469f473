#include "hahn/checks.hpp"

#include <algorithm>
#include <functional>

#include "hahn/embedding.hpp"
#include "hahn/error.hpp"
#include "hahn/eta.hpp"
#include "hahn/prestel.hpp"
#include "hahn/sampling.hpp"

namespace hahn::checks {

nlohmann::json CheckResult::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["cases"] = cases;
    j["failures"] = failures;
    j["passed"] = passed();
    if (counterexample) j["counterexample"] = *counterexample;
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

namespace {

// Stream tags keep each check's samples independent of the others.
enum StreamTag : std::uint64_t {
    kLemma3 = 1, kLemma6, kClassK, kLabels, kGamma1, kProbe, kAxioms, kEmbedF, kEmbedG,
    kConvex, kPrestelF, kPrestelG, kValuation, kCoarsening, kResidue, kInverse, kFrFormula,
};

SampleRng stream(const Options& opt, StreamTag tag) { return SampleRng(opt.seed).split(tag); }

std::string pair_str(const GroupElement& a, const GroupElement& b) { return "(" + a.str() + ", " + b.str() + ")"; }

bool all_support_above(const GroupElement& y, const Cut& cut) {
    for (const auto& [p, c] : y.terms()) {
        if (!cut.contains(p)) return false;
    }
    return true;
}

GroupElement restrict(const GroupElement& a, const std::function<bool(const IndexPoint&)>& keep) {
    std::vector<GroupElement::Term> terms;
    for (const auto& t : a.terms()) {
        if (keep(t.first)) terms.push_back(t);
    }
    return GroupElement::from_terms(std::move(terms));
}

}  // namespace

CheckResult lemma_equivalence(const Options& opt, int r_value) {
    const Divisor r = divisor_from_int(r_value);
    CheckResult res{"lemma_equivalence_r" + std::to_string(r_value)};
    const SampleRng root = stream(opt, r_value == 3 ? kLemma3 : kLemma6);
    std::uint64_t empty_count = 0;
    for (std::uint64_t i = 0, n = opt.count(2000); i < n; ++i) {
        SampleRng rng = root.split(i);
        const GroupElement x = sample::nondivisible(rng, r);
        const GroupElement y = sample::element(rng);
        ++res.cases;
        const bool by_cut = all_support_above(y, fr(x, r));
        const LemmaResult lemma = lemma_rhs(x, y, r);
        if (lemma.empty) ++empty_count;
        if (by_cut != lemma.empty) {
            res.fail(pair_str(x, y));
            continue;
        }
        if (!lemma.empty) {
            const GroupElement& z = *lemma.witness;
            const GroupElement bound = y.abs().scaled(r_value);
            if (z.sign() < 0 || z > bound || !divisible(z - x, r)) res.fail("bad witness " + z.str() + " for " + pair_str(x, y));
        }
    }
    res.detail["empty"] = empty_count;
    res.detail["nonempty"] = res.cases - empty_count;
    return res;
}

CheckResult definable_index(const Options&) {
    CheckResult res{"definable_k"};
    res.cases = 1;
    const IndexPoint k = definable_k();
    if (!(k == IndexPoint::g2y(0))) res.fail(k.str());
    res.detail["k"] = k.str();
    return res;
}

CheckResult fr_on_class_of_k(const Options& opt) {
    CheckResult res{"fr6_on_class_of_k"};
    const Cut expected = Cut::above(IndexPoint::g2y(0));
    const SampleRng root = stream(opt, kClassK);
    for (std::uint64_t i = 0, n = opt.count(200); i < n; ++i) {
        SampleRng rng = root.split(i);
        const GroupElement x = sample::in_class_of_k(rng);
        ++res.cases;
        if (!(fr(x, Divisor::six) == expected)) res.fail(x.str());
    }
    return res;
}

CheckResult obstruction_labels(const Options& opt) {
    CheckResult res{"obstruction_label_y_r3"};
    const SampleRng root = stream(opt, kLabels);
    std::uint64_t x_labels_r6 = 0;
    std::uint64_t y_labels_r6 = 0;
    for (std::uint64_t i = 0, n = opt.count(2000); i < n; ++i) {
        SampleRng rng = root.split(i);
        const GroupElement x = sample::nondivisible(rng, Divisor::three);
        ++res.cases;
        if (label(leading_obstruction(x, Divisor::three)) != Label::y) res.fail(x.str());
        // r = 6 sees both labels
        const GroupElement x6 = sample::nondivisible(rng, Divisor::six);
        (label(leading_obstruction(x6, Divisor::six)) == Label::x ? x_labels_r6 : y_labels_r6)++;
    }
    res.detail["r6_label_x"] = x_labels_r6;
    res.detail["r6_label_y"] = y_labels_r6;
    return res;
}

CheckResult gamma1_definable(const Options& opt) {
    CheckResult res{"gamma1_definable"};
    auto check = [&res](const GroupElement& y) {
        ++res.cases;
        if (in_gamma1_definable(y) != in_gamma1_direct(y)) res.fail(y.str());
    };
    for (const auto& lit : {"1@G2.0.y", "-1@G2.0.y", "1@G1.0.y0", "-1@G1.0.y0", "0"}) check(parse_element(lit));
    const SampleRng root = stream(opt, kGamma1);
    for (std::uint64_t i = 0, n = opt.count(2000); i < n; ++i) {
        SampleRng rng = root.split(i);
        check(sample::element(rng));
    }
    return res;
}

CheckResult gamma1_probe_independence(const Options& opt) {
    CheckResult res{"gamma1_probe_independence"};
    const SampleRng root = stream(opt, kProbe);
    const GroupElement canonical = gamma1_probe();
    for (std::uint64_t i = 0, n = opt.count(200); i < n; ++i) {
        SampleRng rng = root.split(i);
        const GroupElement probe = sample::in_class_of_k(rng);
        if (!sim_r(probe, canonical, Divisor::six)) {
            res.fail("probe not in class: " + probe.str());
            continue;
        }
        for (int j = 0; j < 10; ++j) {
            const GroupElement y = sample::element(rng);
            ++res.cases;
            if (lemma_rhs(probe, y, Divisor::six).empty != in_gamma1_direct(y)) res.fail(pair_str(probe, y));
        }
    }
    return res;
}

CheckResult ordered_group_axioms(const Options& opt) {
    CheckResult res{"ordered_group_axioms"};
    const SampleRng root = stream(opt, kAxioms);
    for (std::uint64_t i = 0, n = opt.count(10000); i < n; ++i) {
        SampleRng rng = root.split(i);
        const GroupElement a = sample::element(rng);
        const GroupElement b = sample::element(rng);
        const GroupElement c = sample::element(rng);
        ++res.cases;
        const std::string triple = "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
        const auto ab = a <=> b;
        // totality and antisymmetry
        if ((ab == 0) != (a == b) || (b <=> a) != (0 <=> ab)) res.fail("totality " + triple);
        if (a < b && b < c && !(a < c)) res.fail("transitivity " + triple);
        if ((a + c <=> b + c) != ab) res.fail("translation " + triple);
        if ((a + b) + c != a + (b + c) || a + b != b + a || a + (-a) != GroupElement()) res.fail("group laws " + triple);
    }
    return res;
}

CheckResult embedding_suite(const Options& opt, bool f_side) {
    const EmbeddingId id = f_side ? EmbeddingId::f3 : EmbeddingId::g3;
    CheckResult res{std::string("embedding_") + std::string(to_string(id))};
    const SampleRng root = stream(opt, f_side ? kEmbedF : kEmbedG);

    auto assembled = [f_side](const GroupElement& a) {
        auto piece = [&a](EmbeddingId part) {
            return apply_embedding(part, restrict(a, [part](const IndexPoint& p) { return in_domain(part, p); }));
        };
        if (f_side) return piece(EmbeddingId::f2) + piece(EmbeddingId::f1);
        return piece(EmbeddingId::g2) + piece(EmbeddingId::g12) + piece(EmbeddingId::g11);
    };
    auto g1_assembled = [](const GroupElement& a) {
        const GroupElement in_g1 = restrict(a, [](const IndexPoint& p) { return in_domain(EmbeddingId::g1, p); });
        auto piece = [&in_g1](EmbeddingId part) {
            return apply_embedding(part, restrict(in_g1, [part](const IndexPoint& p) { return in_domain(part, p); }));
        };
        return std::pair{apply_embedding(EmbeddingId::g1, in_g1), piece(EmbeddingId::g12) + piece(EmbeddingId::g11)};
    };

    for (std::uint64_t i = 0, n = opt.count(1000); i < n; ++i) {
        SampleRng rng = root.split(i);
        const GroupElement a = sample::element(rng);
        const GroupElement b = sample::element(rng);
        const GroupElement ea = apply_embedding(id, a);
        const GroupElement eb = apply_embedding(id, b);
        ++res.cases;
        if (apply_embedding(id, a + b) != ea + eb) res.fail("additivity " + pair_str(a, b));
        if ((a <=> b) != (ea <=> eb)) res.fail("order " + pair_str(a, b));
        if ((a == b) != (ea == eb)) res.fail("injectivity " + pair_str(a, b));
        for (Divisor r : {Divisor::two, Divisor::three, Divisor::six}) {
            if (divisible(a, r) != divisible(ea, r)) res.fail("divisibility " + a.str());
        }
        if (assembled(a) != ea) res.fail("composition " + a.str());
        if (!f_side) {
            const auto [direct, pieces] = g1_assembled(a);
            if (direct != pieces) res.fail("g1 composition " + a.str());
        }
    }
    return res;
}

CheckResult convex_factor_image(const Options& opt) {
    // g12 puts X ⊕ Y onto the final segment {G1.0.x, G1.1.y0} of its
    // codomain (⊕_ℕ Y) ⊕ X ⊕ Y = {G1.0.y*, G1.0.x, G1.1.y0}. Convexity of a
    // subgroup: |c| <= |b| with b in the image forces c into the image.
    CheckResult res{"g12_image_convex"};
    const SampleRng root = stream(opt, kConvex);
    const std::vector<IndexPoint> codomain{IndexPoint::g1y(0, 0), IndexPoint::g1y(0, 1), IndexPoint::g1y(0, 2),
                                           IndexPoint::g1y(0, 3), IndexPoint::g1x(0), IndexPoint::g1y(1, 0)};
    auto in_image = [](const GroupElement::Term& t) {
        return t.first == IndexPoint::g1x(0) || t.first == IndexPoint::g1y(1, 0);
    };
    std::uint64_t bounded = 0;
    for (std::uint64_t i = 0, n = opt.count(1000); i < n; ++i) {
        SampleRng rng = root.split(i);
        std::vector<GroupElement::Term> src;
        for (const IndexPoint& p : {IndexPoint::g2x(0), IndexPoint::g2y(0)}) {
            if (rng.coin()) src.emplace_back(p, sample::coeff(rng, tag_for(label(p))));
        }
        const GroupElement b = apply_embedding(EmbeddingId::g12, GroupElement::from_terms(std::move(src)));
        std::vector<GroupElement::Term> terms;
        for (auto k = rng.uniform(0, 3); k > 0; --k) {
            const IndexPoint& p = codomain[static_cast<std::size_t>(rng.uniform(0, 5))];
            terms.emplace_back(p, sample::coeff(rng, tag_for(label(p))));
        }
        const GroupElement c = GroupElement::from_terms(std::move(terms));
        ++res.cases;
        if (c.abs() <= b.abs()) {
            ++bounded;
            if (!std::all_of(c.terms().begin(), c.terms().end(), in_image)) res.fail(pair_str(c, b));
        }
    }
    res.detail["bounded"] = bounded;
    return res;
}

CheckResult prestel_directions(const Options& opt, bool f_side) {
    const FieldEmbedding id = f_side ? FieldEmbedding::f : FieldEmbedding::g;
    CheckResult res{std::string("prestel_") + std::string(to_string(id))};
    const std::uint64_t n = opt.count(1000);
    const PrestelReport report = prestel_report(id, n, SampleRng(opt.seed).split(f_side ? kPrestelF : kPrestelG).next());
    res.cases = n + 2;
    res.detail = report.to_json();
    const DirectionResult& should_fail = f_side ? report.forward : report.backward;
    const DirectionResult& should_hold = f_side ? report.backward : report.forward;
    if (should_fail.holds) res.fail("no counterexample for the failing direction");
    if (!should_hold.holds) res.fail("unexpected counterexample " + should_hold.witness->str());
    if (!should_fail.holds) {
        const bool x_in = in_O(*should_fail.witness, ValuationKind::w);
        const bool image_in = in_O(*should_fail.image, ValuationKind::w);
        // f: x ∈ 𝒪_w, f(x) ∉ 𝒪_w;  g: x ∉ 𝒪_w, g(x) ∈ 𝒪_w
        if (x_in != f_side || image_in == f_side) res.fail("witness membership pair " + should_fail.witness->str());
    }
    return res;
}

CheckResult valuation_axioms(const Options& opt) {
    CheckResult res{"valuation_axioms"};
    const SampleRng root = stream(opt, kValuation);
    for (std::uint64_t i = 0, n = opt.count(1000); i < n; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series(rng, ResidueField::q);
        const Series b = sample::series(rng, ResidueField::q);
        ++res.cases;
        const std::string pair = "(" + a.str() + ", " + b.str() + ")";
        for (auto value : {&val, &w_val}) {
            const ExtValue va = value(a);
            const ExtValue vb = value(b);
            if (value(a * b) != va + vb) res.fail("multiplicativity " + pair);
            const ExtValue vs = value(a + b);
            const ExtValue lower = va <= vb ? va : vb;
            if (vs < lower || (va != vb && vs != lower)) res.fail("ultrametric " + pair);
        }
    }
    return res;
}

CheckResult coarsening(const Options& opt) {
    CheckResult res{"coarsening_Ov_in_Ow"};
    const SampleRng root = stream(opt, kCoarsening);
    for (std::uint64_t i = 0, n = opt.count(1000); i < n; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series(rng, ResidueField::q);
        ++res.cases;
        if (in_O(a, ValuationKind::v) && !in_O(a, ValuationKind::w)) res.fail(a.str());
    }
    const Series unit = curated_gamma1_unit();
    ++res.cases;
    if (in_O(unit, ValuationKind::v) || !in_O(unit, ValuationKind::w)) res.fail("strictness witness " + unit.str());
    res.detail["strict_witness"] = unit.str();
    return res;
}

CheckResult residue_homomorphism(const Options& opt) {
    CheckResult res{"residue_w_homomorphism"};
    const SampleRng root = stream(opt, kResidue);
    ++res.cases;
    if (residue_w(Series::one(ResidueField::q)) != Series::one(ResidueField::q)) res.fail("residue of 1");
    for (std::uint64_t i = 0, n = opt.count(500); i < n; ++i) {
        SampleRng rng = root.split(i);
        const Series a = sample::series_in_Ow(rng, ResidueField::q);
        const Series b = sample::series_in_Ow(rng, ResidueField::q);
        ++res.cases;
        const std::string pair = "(" + a.str() + ", " + b.str() + ")";
        if (residue_w(a + b) != residue_w(a) + residue_w(b)) res.fail("additive " + pair);
        if (residue_w(a * b) != residue_w(a) * residue_w(b)) res.fail("multiplicative " + pair);
    }
    return res;
}

CheckResult inverse_threshold(const Options& opt) {
    CheckResult res{"inverse_residual_threshold"};
    const SampleRng root = stream(opt, kInverse);
    for (std::uint64_t i = 0, n = opt.count(200); i < n; ++i) {
        SampleRng rng = root.split(i);
        Series a = sample::series(rng, i % 2 == 0 ? ResidueField::q : ResidueField::qi);
        while (a.is_zero()) a = sample::series(rng, ResidueField::q);
        const UnitDecomposition d = decompose_unit(a);
        for (unsigned iterations = 0; iterations <= 3; ++iterations) {
            ++res.cases;
            const Series residual = a * s_inverse(a, iterations) - Series::one(a.field());
            const ExtValue threshold = d.epsilon.is_zero()
                                           ? ExtValue::infinity()
                                           : ExtValue::of(val(d.epsilon).element().scaled(iterations + 1));
            if (val(residual) < threshold) res.fail(a.str() + " at " + std::to_string(iterations));
        }
    }
    return res;
}

const std::vector<CorpusEntry>& formula_corpus() {
    using logic::Signature;
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> c{
            {Signature::group, "x = 0"},
            {Signature::group, "x < y"},
            {Signature::group, "x <= y"},
            {Signature::group, "0 < x"},
            {Signature::group, "x < y & y < z"},
            {Signature::group, "x < y | y < z"},
            {Signature::group, "x < y & y < z | z < x"},
            {Signature::group, "x < y & (y < z | z < x)"},
            {Signature::group, "!(x < 0)"},
            {Signature::group, "!(x < 0) & !(y < 0)"},
            {Signature::group, "!(!(x = y))"},
            {Signature::group, "Div_2(x)"},
            {Signature::group, "Div_3(x + y)"},
            {Signature::group, "Div_6(z - x)"},
            {Signature::group, "Ex z. x = z + z"},
            {Signature::group, "Ex z. 2*z = x"},
            {Signature::group, "All y. y < x | x <= y"},
            {Signature::group, "Ex u. Ex t. x = u + t"},
            {Signature::group, "6*y = x"},
            {Signature::group, "z <= -6*y"},
            {Signature::group, "x = -y"},
            {Signature::group, "x - y - z = 0"},
            {Signature::group, "x - (y - z) = 0"},
            {Signature::group, "x + y = y + x"},
            {Signature::group, "All x. Ex y. x = 2*y | x = 2*y + z"},
            {Signature::group, "(Ex z. x = 3*z) | Div_3(x)"},
            {Signature::group, "x < y & (All z. z < z + x)"},
            {Signature::group, "Ex a. Ex b. a < b & b < x & Div_2(a - b)"},
            {Signature::group, "!(Ex z. !(z < 0) & (z <= 6*y | z <= -6*y) & Div_6(z - x))"},
            {Signature::group, "!(Ex z. !(z < 0) & (z <= 3*y | z <= -3*y) & Div_3(z - x))"},
            {Signature::ring, "x*y = 1"},
            {Signature::ring, "x = u + t"},
            {Signature::ring, "y1*(y^3 - 2) = 1"},
            {Signature::ring, "x^2 + 1 = 0"},
            {Signature::ring, "(x + 1)^2 = x^2 + 2*x + 1"},
            {Signature::ring, "Ex y. x = y^2"},
            {Signature::ring, "Ex y. Ex z. x = y^2 + z^2 | x = -y^2"},
            {Signature::ring, "All x. x = 0 | (Ex y. x*y = 1)"},
            {Signature::ring, "t = 0 | t = y1*z1"},
            {Signature::ring, "u = y1 - z1 & y1*(y^3 - 2) = 1 & z1*(z^3 - 2) = 1"},
            {Signature::ring, "x*(y + z) = x*y + x*z"},
            {Signature::ring, "x*y*z = 1"},
            {Signature::ring, "x*(y*z) = 1"},
            {Signature::ring, "-x*y = 0"},
            {Signature::ring, "-(x*y) = 0"},
            {Signature::ring, "x^3 - 2 = 0"},
            {Signature::ring, "!(x = 0)"},
            {Signature::ring, "Ex y. !(y = 0) & x*y = 1"},
            {Signature::ring, "(x - 1)*(x + 1) = x^2 - 1"},
        };
        c.push_back({Signature::ring, logic::print(logic::eta())});
        return c;
    }();
    return corpus;
}

CheckResult formula_roundtrip(const Options&) {
    CheckResult res{"formula_roundtrip"};
    for (const auto& entry : formula_corpus()) {
        ++res.cases;
        try {
            const logic::FormulaPtr f = logic::parse(entry.text, entry.signature);
            const std::string printed = logic::print(f);
            if (printed != entry.text) res.fail(entry.text + " printed as " + printed);
            if (!logic::same(logic::parse(printed, entry.signature), f)) res.fail("reparse " + entry.text);
        } catch (const Error& e) {
            res.fail(entry.text + ": " + e.what());
        }
    }
    ++res.cases;
    if (!logic::same(logic::parse(logic::print(logic::eta()), logic::Signature::ring), logic::eta())) res.fail("eta");
    return res;
}

CheckResult eta_trivial_witness(const Options&) {
    // x = 0 = u + t with u = y1 - z1 where y = z = 0, y1 = z1 = -1/2; t = 0.
    CheckResult res{"eta_trivial_witness"};
    const Series zero;
    const Series half = Series::constant(Scalar::rational(-1, 2));
    const Series one = Series::one(ResidueField::q);
    const logic::EtaBlock block{zero, zero, half, half};

    ++res.cases;
    if (!logic::check_eta_witness(zero, {zero, zero}, block, block, 0)) res.fail("trivial witness rejected");

    // Tamper one witness variable by +1. The block variables y, z, y1, z1 of
    // the trivial set carry the same values in both blocks.
    auto tampered_block = [&](int which) {
        logic::EtaBlock b = block;
        if (which == 0) b.y = b.y + one;
        if (which == 1) b.z = b.z + one;
        if (which == 2) b.y1 = *b.y1 + one;
        if (which == 3) b.z1 = *b.z1 + one;
        return b;
    };
    const char* names[] = {"y", "z", "y1", "z1"};
    for (int k = 0; k < 4; ++k) {
        ++res.cases;
        const logic::EtaBlock b = tampered_block(k);
        if (logic::check_eta_witness(zero, {zero, zero}, b, b, 0)) res.fail(std::string("tampered ") + names[k] + " accepted");
    }
    const std::pair<const char*, std::function<bool()>> scalars[] = {
        {"x", [&] { return logic::check_eta_witness(one, {zero, zero}, block, block, 0); }},
        {"u", [&] { return logic::check_eta_witness(zero, {one, zero}, block, block, 0); }},
        {"t", [&] { return logic::check_eta_witness(zero, {zero, one}, block, block, 0); }},
    };
    for (const auto& [name, run] : scalars) {
        ++res.cases;
        if (run()) res.fail(std::string("tampered ") + name + " accepted");
    }
    return res;
}

CheckResult fr_formula_agreement(const Options& opt) {
    CheckResult res{"fr_formula_agreement"};
    const SampleRng root = stream(opt, kFrFormula);
    for (std::uint64_t i = 0, n = opt.count(500); i < n; ++i) {
        SampleRng rng = root.split(i);
        const int r_value = i % 2 == 0 ? 3 : 6;
        const Divisor r = divisor_from_int(r_value);
        const GroupElement x = sample::nondivisible(rng, r);
        const GroupElement y = sample::element(rng);
        ++res.cases;
        if (logic::eval_fr_formula(x, y, r) != all_support_above(y, fr(x, r))) res.fail(pair_str(x, y));
    }
    return res;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma", "construction", "axioms"};
    return names;
}

std::vector<CheckResult> suite(std::string_view name, const Options& opt) {
    if (name == "lemma") {
        return {lemma_equivalence(opt, 3), lemma_equivalence(opt, 6), definable_index(opt), fr_on_class_of_k(opt),
                obstruction_labels(opt), gamma1_definable(opt), gamma1_probe_independence(opt)};
    }
    if (name == "construction") {
        return {ordered_group_axioms(opt), embedding_suite(opt, true), embedding_suite(opt, false),
                convex_factor_image(opt), prestel_directions(opt, true), prestel_directions(opt, false)};
    }
    if (name == "axioms") {
        return {valuation_axioms(opt), coarsening(opt), residue_homomorphism(opt), inverse_threshold(opt),
                formula_roundtrip(opt), eta_trivial_witness(opt), fr_formula_agreement(opt)};
    }
    throw Error(ErrorKind::Precondition, "unknown check suite '" + std::string(name) + "'");
}

nlohmann::json suite_json(std::string_view name, const Options& opt, const std::vector<CheckResult>& results) {
    nlohmann::json j;
    j["suite"] = std::string(name);
    j["seed"] = std::to_string(opt.seed);
    j["samples"] = opt.samples ? nlohmann::json(*opt.samples) : nlohmann::json("default");
    bool ok = true;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) {
        ok = ok && r.passed();
        list.push_back(r.to_json());
    }
    j["checks"] = std::move(list);
    j["passed"] = ok;
    return j;
}

}  // namespace hahn::checks
