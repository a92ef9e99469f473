#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hahn/formula.hpp"

namespace hahn::checks {

/// Outcome of one seeded property check.
struct CheckResult {
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// First failing input, rendered.
    std::optional<std::string> counterexample;
    /// Check-specific counters (e.g. how many pairs landed on each side).
    nlohmann::json detail = nlohmann::json::object();

    bool passed() const { return failures == 0; }
    void fail(std::string what) {
        if (failures++ == 0) counterexample = std::move(what);
    }
    nlohmann::json to_json() const;
};

struct Options {
    std::uint64_t seed = 7;
    /// Replaces every per-check sample count when set.
    std::optional<std::uint64_t> samples;

    std::uint64_t count(std::uint64_t default_count) const { return samples.value_or(default_count); }
};

// Suite "lemma".
CheckResult lemma_equivalence(const Options& opt, int r);        // 2000 pairs
CheckResult definable_index(const Options& opt);
CheckResult fr_on_class_of_k(const Options& opt);                // 200 samples
CheckResult obstruction_labels(const Options& opt);              // 2000 samples
CheckResult gamma1_definable(const Options& opt);                // 2000 samples + boundary
CheckResult gamma1_probe_independence(const Options& opt);       // 200 probes x 10

// Suite "construction".
CheckResult ordered_group_axioms(const Options& opt);            // 10^4 triples
CheckResult embedding_suite(const Options& opt, bool f_side);    // 1000 samples
CheckResult convex_factor_image(const Options& opt);             // 1000 samples
CheckResult prestel_directions(const Options& opt, bool f_side); // 1000 samples

// Suite "axioms": valued field.
CheckResult valuation_axioms(const Options& opt);                // 1000 pairs
CheckResult coarsening(const Options& opt);                      // 1000 samples
CheckResult residue_homomorphism(const Options& opt);            // 500 pairs
CheckResult inverse_threshold(const Options& opt);               // 200 samples x 4

// Suite "axioms": formulas.
struct CorpusEntry {
    logic::Signature signature;
    std::string text;  // canonical printed form
};
const std::vector<CorpusEntry>& formula_corpus();
CheckResult formula_roundtrip(const Options& opt);
CheckResult eta_trivial_witness(const Options& opt);
CheckResult fr_formula_agreement(const Options& opt);            // 500 pairs

/// The bundles behind `check lemma|construction|axioms`.
std::vector<CheckResult> suite(std::string_view name, const Options& opt);
const std::vector<std::string>& suite_names();

/// {checks: [...], passed, samples, seed, suite}
nlohmann::json suite_json(std::string_view name, const Options& opt, const std::vector<CheckResult>& results);

}  // namespace hahn::checks
