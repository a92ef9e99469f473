// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hahn/checks.hpp"
#include "hahn/cli.hpp"
#include "hahn/prestel.hpp"

using namespace hahn;
using checks::CheckResult;
using checks::Options;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok;
    std::string detail;
};

std::string summarize(const std::vector<CheckResult>& results) {
    std::string s;
    for (const auto& r : results) {
        if (!s.empty()) s += ", ";
        s += r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
        if (r.counterexample) s += " first failure: " + *r.counterexample;
    }
    return s;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.passed()) return false;
    }
    return true;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string timing(double s, double limit) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2fs (limit %.0fs)", s, limit);
    return buf;
}

Outcome criterion_lemma(const Options& opt) {
    const auto start = Clock::now();
    std::vector<CheckResult> r{checks::lemma_equivalence(opt, 3), checks::lemma_equivalence(opt, 6)};
    const double s = seconds_since(start);
    return {all_pass(r) && s < 5.0, summarize(r) + "; " + timing(s, 5)};
}

Outcome criterion_spine(const Options& opt) {
    std::vector<CheckResult> r{checks::definable_index(opt), checks::fr_on_class_of_k(opt),
                               checks::obstruction_labels(opt)};
    return {all_pass(r), summarize(r)};
}

Outcome criterion_gamma1(const Options& opt) {
    std::vector<CheckResult> r{checks::gamma1_definable(opt)};
    return {all_pass(r), summarize(r)};
}

Outcome criterion_embeddings(const Options& opt) {
    std::vector<CheckResult> r{checks::embedding_suite(opt, true), checks::embedding_suite(opt, false)};
    return {all_pass(r), summarize(r)};
}

Outcome criterion_prestel(const Options& opt) {
    std::vector<CheckResult> r{checks::prestel_directions(opt, true), checks::prestel_directions(opt, false)};
    const PrestelReport f = prestel_report(FieldEmbedding::f, 1000, opt.seed);
    const PrestelReport g = prestel_report(FieldEmbedding::g, 1000, opt.seed);
    const bool shape = !f.forward.holds && f.backward.holds && g.forward.holds && !g.backward.holds;
    return {all_pass(r) && shape, summarize(r) + "; f forward witness " +
                                      (f.forward.witness ? f.forward.witness->str() : "none") +
                                      ", g backward witness " + (g.backward.witness ? g.backward.witness->str() : "none")};
}

Outcome criterion_valued_field(const Options& opt) {
    const auto start = Clock::now();
    std::vector<CheckResult> r{checks::valuation_axioms(opt), checks::coarsening(opt),
                               checks::residue_homomorphism(opt), checks::inverse_threshold(opt)};
    const double s = seconds_since(start);
    return {all_pass(r) && s < 10.0, summarize(r) + "; " + timing(s, 10)};
}

Outcome criterion_formulas(const Options& opt) {
    std::vector<CheckResult> r{checks::formula_roundtrip(opt), checks::eta_trivial_witness(opt),
                               checks::fr_formula_agreement(opt)};
    return {all_pass(r), summarize(r)};
}

Outcome criterion_determinism(const Options& opt) {
    const std::string seed = std::to_string(opt.seed);
    const std::vector<std::vector<std::string>> invocations = {
        {"check", "lemma", "--seed", seed},
        {"check", "construction", "--seed", seed},
        {"check", "axioms", "--seed", seed},
        {"report", "prestel", "f", "--samples", "1000", "--seed", seed},
        {"report", "prestel", "g", "--samples", "1000", "--seed", seed},
    };
    std::string detail;
    bool ok = true;
    for (const auto& args : invocations) {
        std::ostringstream out1, out2, err;
        const int c1 = cli::run(args, out1, err);
        const int c2 = cli::run(args, out2, err);
        const bool same = c1 == c2 && out1.str() == out2.str() && !out1.str().empty();
        ok = ok && same;
        if (!detail.empty()) detail += ", ";
        detail += args[0] + " " + args[1] + (args[0] == "report" ? " " + args[2] : "") + (same ? " identical" : " DIFFERS");
    }
    return {ok, detail};
}

}  // namespace

int main() {
    Options opt;
    const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>> criteria = {
        {"1 lemma equivalence", criterion_lemma},
        {"2 spine facts", criterion_spine},
        {"3 definable gamma1", criterion_gamma1},
        {"4 embedding suite", criterion_embeddings},
        {"5 quantifier-complexity witnesses", criterion_prestel},
        {"6 valued-field axioms", criterion_valued_field},
        {"7 formula layer", criterion_formulas},
        {"8 determinism", criterion_determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const Outcome o = run(opt);
        std::printf("%s criterion %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        if (!o.ok) ++failed;
    }
    std::printf("%d/%zu criteria passed (seed %llu)\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
                static_cast<unsigned long long>(opt.seed));
    return failed == 0 ? 0 : 1;
}
