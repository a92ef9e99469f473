#include "hahn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hahn/checks.hpp"
#include "hahn/embedding.hpp"
#include "hahn/error.hpp"
#include "hahn/eta.hpp"
#include "hahn/prestel.hpp"

namespace hahn::cli {

bool Args::has(const std::string& key) const {
    auto it = values.find(key);
    return it != values.end() && !it->second.empty();
}

const std::string& Args::get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end() || it->second.empty()) {
        throw Error(ErrorKind::Precondition, "missing --" + key);
    }
    return it->second;
}

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 7;
constexpr std::uint64_t kDefaultSamples = 1000;
constexpr unsigned kDefaultIterations = 3;

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 20) {
        throw Error(ErrorKind::Precondition, what + " must be a non-negative integer, got '" + text + "'");
    }
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::Precondition, what + " out of range");
    }
}

std::uint64_t seed_of(const Args& a) { return a.has("seed") ? parse_u64(a.get("seed"), "--seed") : kDefaultSeed; }
unsigned iterations_of(const Args& a) {
    return a.has("iterations") ? static_cast<unsigned>(parse_u64(a.get("iterations"), "--iterations")) : kDefaultIterations;
}
Divisor divisor_of(const Args& a) { return divisor_from_int(static_cast<long>(parse_u64(a.get("r"), "--r"))); }

LocalTag tag_of(const Args& a) {
    const std::string& t = a.get("tag");
    if (t == "X2" || t == "x2") return LocalTag::x2;
    if (t == "Y3" || t == "y3") return LocalTag::y3;
    throw Error(ErrorKind::Precondition, "--tag must be X2 or Y3");
}

GroupElement elem(const Args& a, const std::string& key) { return parse_element(a.get(key)); }

/// Brings two series to a common residue field.
std::pair<Series, Series> aligned(Series a, Series b) {
    if (a.field() != b.field()) {
        if (a.field() == ResidueField::q) a = a.promoted();
        if (b.field() == ResidueField::q) b = b.promoted();
    }
    return {std::move(a), std::move(b)};
}

json ext_json(const ExtValue& v) { return v.str(); }

logic::Signature signature_of(const Args& a) {
    if (!a.has("sig")) return logic::Signature::group;
    const std::string& s = a.get("sig");
    if (s == "group") return logic::Signature::group;
    if (s == "ring") return logic::Signature::ring;
    throw Error(ErrorKind::Precondition, "--sig must be group or ring");
}

logic::Assignment assignment_of(const Args& a, logic::Signature sig) {
    logic::Assignment out;
    for (const std::string& binding : a.lets) {
        const auto eq = binding.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw Error(ErrorKind::Precondition, "--let expects name=literal, got '" + binding + "'");
        }
        const std::string name = binding.substr(0, eq);
        const std::string literal = binding.substr(eq + 1);
        if (sig == logic::Signature::group) out.insert_or_assign(name, parse_element(literal));
        else out.insert_or_assign(name, parse_series(literal));
    }
    return out;
}

logic::EtaBlock block_of(const std::string& text, ResidueField field) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4) throw Error(ErrorKind::Precondition, "eta block needs y,z,y1,z1 (use 'inv' to request an inverse)");
    auto series = [field](const std::string& s) {
        Series v = parse_series(s);
        return field == ResidueField::qi && v.field() == ResidueField::q ? v.promoted() : v;
    };
    auto optional_series = [&](const std::string& s) -> std::optional<Series> {
        std::string trimmed = s;
        trimmed.erase(std::remove(trimmed.begin(), trimmed.end(), ' '), trimmed.end());
        if (trimmed == "inv") return std::nullopt;
        return series(s);
    };
    return {series(parts[0]), series(parts[1]), optional_series(parts[2]), optional_series(parts[3])};
}

std::vector<Command> build_table() {
    std::vector<Command> t;

    // coefficients
    t.push_back({{"coeff", "make"}, {}, {"num", "tag"}, {"den"}, {"coeff_make"}, "reduce num/den into Z_(2) or Z_(3)",
                 [](const Args& a) {
                     const mpz_class den = a.has("den") ? mpz_class(a.get("den")) : mpz_class(1);
                     return Outcome{{{"coeff", coeff_make(mpz_class(a.get("num")), den, tag_of(a)).str()}}};
                 }});
    t.push_back({{"coeff", "add"}, {}, {"a", "b", "tag"}, {}, {"coeff_add"}, "sum of two coefficients",
                 [](const Args& a) {
                     return Outcome{{{"sum", coeff_add(parse_coeff(a.get("a"), tag_of(a)), parse_coeff(a.get("b"), tag_of(a))).str()}}};
                 }});
    t.push_back({{"coeff", "neg"}, {}, {"a", "tag"}, {}, {"coeff_neg"}, "negation",
                 [](const Args& a) { return Outcome{{{"neg", coeff_neg(parse_coeff(a.get("a"), tag_of(a))).str()}}}; }});
    t.push_back({{"coeff", "cmp"}, {}, {"a", "b", "tag"}, {}, {"coeff_cmp"}, "compare two coefficients",
                 [](const Args& a) {
                     const auto c = coeff_cmp(parse_coeff(a.get("a"), tag_of(a)), parse_coeff(a.get("b"), tag_of(a)));
                     return Outcome{{{"cmp", std::string(to_string(c))}}};
                 }});
    t.push_back({{"coeff", "divisible"}, {}, {"a", "r", "tag"}, {}, {"coeff_divisible"}, "r-divisibility in the localization",
                 [](const Args& a) {
                     return Outcome{{{"divisible", coeff_divisible(parse_coeff(a.get("a"), tag_of(a)), divisor_of(a))}}};
                 }});
    t.push_back({{"coeff", "witness"}, {}, {"a", "r", "hi", "tag"}, {}, {"coeff_coset_witness"},
                 "element of a + rL inside (0, hi)", [](const Args& a) {
                     const Coeff c = coeff_coset_witness(parse_coeff(a.get("a"), tag_of(a)), divisor_of(a),
                                                         parse_coeff(a.get("hi"), tag_of(a)));
                     return Outcome{{{"witness", c.str()}}};
                 }});

    // index spine
    t.push_back({{"point", "cmp"}, {}, {"p", "q"}, {}, {"point_cmp"}, "order of two index points",
                 [](const Args& a) {
                     return Outcome{{{"cmp", std::string(to_string(point_cmp(parse_point(a.get("p")), parse_point(a.get("q")))))}}};
                 }});
    t.push_back({{"point", "label"}, {}, {"p"}, {}, {"label"}, "X or Y",
                 [](const Args& a) { return Outcome{{{"label", std::string(to_string(label(parse_point(a.get("p")))))}}}; }});
    t.push_back({{"point", "succ"}, {}, {"p"}, {}, {"successor"}, "immediate successor",
                 [](const Args& a) { return Outcome{{{"successor", successor(parse_point(a.get("p"))).str()}}}; }});
    t.push_back({{"point", "k"}, {}, {}, {}, {"definable_k"}, "the definable index k",
                 [](const Args&) { return Outcome{{{"k", definable_k().str()}}}; }});
    t.push_back({{"cut", "member"}, {}, {"p", "cut"}, {}, {"cut_member"}, "point in final segment",
                 [](const Args& a) { return Outcome{{{"member", cut_member(parse_point(a.get("p")), parse_cut(a.get("cut")))}}}; }});
    t.push_back({{"cut", "cmp"}, {}, {"a", "b"}, {}, {"cut_cmp"}, "containment of final segments",
                 [](const Args& a) {
                     return Outcome{{{"cmp", std::string(to_string(cut_cmp(parse_cut(a.get("a")), parse_cut(a.get("b")))))}}};
                 }});

    // group elements
    t.push_back({{"elem", "cmp"}, {}, {"a", "b"}, {}, {"g_cmp"}, "lexicographic order",
                 [](const Args& a) { return Outcome{{{"cmp", std::string(to_string(g_cmp(elem(a, "a"), elem(a, "b"))))}}}; }});
    t.push_back({{"elem", "add"}, {}, {"a", "b"}, {}, {"g_add"}, "componentwise sum",
                 [](const Args& a) { return Outcome{{{"sum", g_add(elem(a, "a"), elem(a, "b")).str()}}}; }});
    t.push_back({{"elem", "neg"}, {}, {"a"}, {}, {"g_neg"}, "negation",
                 [](const Args& a) { return Outcome{{{"neg", g_neg(elem(a, "a")).str()}}}; }});
    t.push_back({{"elem", "divisible"}, {}, {"a", "r"}, {}, {"divisible", "leading_obstruction"},
                 "membership in rΓ and the leading obstruction", [](const Args& a) {
                     const GroupElement x = elem(a, "a");
                     const Divisor r = divisor_of(a);
                     json j{{"divisible", divisible(x, r)}};
                     if (!divisible(x, r)) j["obstruction"] = leading_obstruction(x, r).str();
                     return Outcome{j};
                 }});
    t.push_back({{"elem", "project"}, {}, {"a", "cut"}, {}, {"project_quotient"}, "image in Γ/C",
                 [](const Args& a) { return Outcome{{{"image", project_quotient(elem(a, "a"), parse_cut(a.get("cut"))).str()}}}; }});

    t.push_back({{"group", "fr"}, {}, {"x", "r"}, {}, {"fr"}, "F_r(x) as a cut",
                 [](const Args& a) { return Outcome{{{"cut", fr(elem(a, "x"), divisor_of(a)).str()}}}; }});
    t.push_back({{"group", "lemma"}, {}, {"x", "y", "r"}, {}, {"lemma_rhs"}, "does [0, r|y|] meet x + rΓ",
                 [](const Args& a) {
                     const LemmaResult res = lemma_rhs(elem(a, "x"), elem(a, "y"), divisor_of(a));
                     json j{{"empty", res.empty}};
                     if (res.witness) j["witness"] = res.witness->str();
                     return Outcome{j};
                 }});
    t.push_back({{"group", "gamma1"}, {}, {"y"}, {}, {"in_gamma1_direct", "in_gamma1_definable"},
                 "Γ₁ membership, directly and via the definition", [](const Args& a) {
                     const GroupElement y = elem(a, "y");
                     return Outcome{{{"direct", in_gamma1_direct(y)}, {"definable", in_gamma1_definable(y)}}};
                 }});
    t.push_back({{"group", "sim"}, {}, {"a", "b", "r"}, {}, {"sim_r"}, "F_r(a) = F_r(b)",
                 [](const Args& a) { return Outcome{{{"sim", sim_r(elem(a, "a"), elem(a, "b"), divisor_of(a))}}}; }});

    t.push_back({{"embed"}, {"id"}, {"a"}, {}, {"apply_embedding"}, "apply f1|f2|f3|g11|g12|g1|g2|g3",
                 [](const Args& a) {
                     const EmbeddingId id = parse_embedding_id(a.get("id"));
                     return Outcome{{{"embedding", std::string(to_string(id))}, {"image", apply_embedding(id, elem(a, "a")).str()}}};
                 }});

    // series
    t.push_back({{"series", "val"}, {}, {"a"}, {}, {"val"}, "v-value",
                 [](const Args& a) { return Outcome{{{"val", ext_json(val(parse_series(a.get("a"))))}}}; }});
    t.push_back({{"series", "wval"}, {}, {"a"}, {}, {"w_val"}, "w-value (Γ₂ part)",
                 [](const Args& a) { return Outcome{{{"w_val", ext_json(w_val(parse_series(a.get("a"))))}}}; }});
    t.push_back({{"series", "member"}, {}, {"a"}, {}, {"in_O"}, "membership in 𝒪_v and 𝒪_w",
                 [](const Args& a) {
                     const Series s = parse_series(a.get("a"));
                     return Outcome{{{"in_Ov", in_O(s, ValuationKind::v)}, {"in_Ow", in_O(s, ValuationKind::w)}}};
                 }});
    t.push_back({{"series", "residue"}, {}, {"a"}, {}, {"residue_w"}, "residue in k((Γ₁))",
                 [](const Args& a) { return Outcome{{{"residue", residue_w(parse_series(a.get("a"))).str()}}}; }});
    t.push_back({{"series", "inv"}, {}, {"a"}, {"iterations"}, {"s_inverse"}, "truncated inverse",
                 [](const Args& a) {
                     const unsigned n = iterations_of(a);
                     return Outcome{{{"inverse", s_inverse(parse_series(a.get("a")), n).str()}, {"iterations", n}}};
                 }});
    t.push_back({{"series", "mul"}, {}, {"a", "b"}, {}, {"s_mul"}, "product",
                 [](const Args& a) {
                     auto [x, y] = aligned(parse_series(a.get("a")), parse_series(a.get("b")));
                     return Outcome{{{"product", s_mul(x, y).str()}}};
                 }});
    t.push_back({{"series", "add"}, {}, {"a", "b"}, {}, {"s_add"}, "sum",
                 [](const Args& a) {
                     auto [x, y] = aligned(parse_series(a.get("a")), parse_series(a.get("b")));
                     return Outcome{{{"sum", s_add(x, y).str()}}};
                 }});
    t.push_back({{"series", "neg"}, {}, {"a"}, {}, {"s_neg"}, "negation",
                 [](const Args& a) { return Outcome{{{"neg", s_neg(parse_series(a.get("a"))).str()}}}; }});
    t.push_back({{"series", "embed"}, {"id"}, {"a"}, {}, {"apply_field_embedding"}, "apply f or g to a series",
                 [](const Args& a) {
                     const FieldEmbedding id = parse_field_embedding(a.get("id"));
                     return Outcome{{{"embedding", std::string(to_string(id))},
                                     {"image", apply_field_embedding(id, parse_series(a.get("a"))).str()}}};
                 }});

    // formulas
    t.push_back({{"formula", "parse"}, {}, {"text"}, {"sig"}, {"parse", "print"}, "parse and print canonically",
                 [](const Args& a) {
                     const logic::FormulaPtr f = logic::parse(a.get("text"), signature_of(a));
                     json free = json::array();
                     for (const auto& v : logic::free_variables(f)) free.push_back(v);
                     return Outcome{{{"printed", logic::print(f)}, {"free", free}, {"quantifier_free", logic::quantifier_free(f)}}};
                 }});
    t.push_back({{"formula", "eval"}, {}, {"text"}, {"sig"}, {"eval_qf", "eval_fr_pattern"},
                 "evaluate a quantifier-free formula (or the F_r pattern) under --let bindings", [](const Args& a) {
                     const logic::Signature sig = signature_of(a);
                     const logic::FormulaPtr f = logic::parse(a.get("text"), sig);
                     const logic::Assignment env = assignment_of(a, sig);
                     const bool value = logic::quantifier_free(f)
                                            ? logic::eval_qf(f, env, sig == logic::Signature::group ? logic::Structure::group : logic::Structure::series)
                                            : logic::eval_fr_pattern(f, env);
                     return Outcome{{{"value", value}}};
                 }});
    t.push_back({{"formula", "eta"}, {}, {}, {}, {"eta"}, "print the formula η",
                 [](const Args&) { return Outcome{{{"eta", logic::print(logic::eta())}}}; }});
    t.push_back({{"formula", "eta-check"}, {}, {"x", "u", "t", "block1", "block2"}, {"iterations"}, {"check_eta_witness"},
                 "check witnesses for η; blocks are y,z,y1,z1 with 'inv' requesting an inverse", [](const Args& a) {
                     Series x = parse_series(a.get("x"));
                     Series u = parse_series(a.get("u"));
                     Series t = parse_series(a.get("t"));
                     const bool gaussian = x.field() == ResidueField::qi || u.field() == ResidueField::qi ||
                                           t.field() == ResidueField::qi ||
                                           a.get("block1").find(" i") != std::string::npos ||
                                           a.get("block2").find(" i") != std::string::npos;
                     const ResidueField field = gaussian ? ResidueField::qi : ResidueField::q;
                     if (gaussian) {
                         if (x.field() == ResidueField::q) x = x.promoted();
                         if (u.field() == ResidueField::q) u = u.promoted();
                         if (t.field() == ResidueField::q) t = t.promoted();
                     }
                     const unsigned n = iterations_of(a);
                     const bool ok = logic::check_eta_witness(x, {u, t}, block_of(a.get("block1"), field),
                                                              block_of(a.get("block2"), field), n);
                     return Outcome{{{"accepted", ok}, {"iterations", n}}};
                 }});
    t.push_back({{"formula", "fr"}, {}, {"x", "y", "r"}, {}, {"eval_fr_formula"}, "y ∈ F_r(x) via its formula",
                 [](const Args& a) {
                     const Divisor r = divisor_of(a);
                     return Outcome{{{"formula", logic::print(logic::fr_formula(r))},
                                     {"value", logic::eval_fr_formula(elem(a, "x"), elem(a, "y"), r)}}};
                 }});

    // bundled suites and reports
    for (const std::string& name : checks::suite_names()) {
        t.push_back({{"check", name}, {}, {}, {"seed", "samples"}, {"check " + name}, "run the " + name + " property suite",
                     [name](const Args& a) {
                         checks::Options opt;
                         opt.seed = seed_of(a);
                         if (a.has("samples")) opt.samples = parse_u64(a.get("samples"), "--samples");
                         const auto results = checks::suite(name, opt);
                         json body = checks::suite_json(name, opt, results);
                         const bool ok = body["passed"].get<bool>();
                         return Outcome{std::move(body), ok ? 0 : 1};
                     }});
    }
    t.push_back({{"report", "prestel"}, {"id"}, {}, {"seed", "samples"}, {"prestel_report"},
                 "inclusion directions of 𝒪_w under f or g", [](const Args& a) {
                     const std::uint64_t samples = a.has("samples") ? parse_u64(a.get("samples"), "--samples") : kDefaultSamples;
                     return Outcome{prestel_report(parse_field_embedding(a.get("id")), samples, seed_of(a)).to_json()};
                 }});
    return t;
}

std::string command_usage(const Command& c) {
    std::string s;
    for (const auto& p : c.path) s += p + " ";
    for (const auto& p : c.positionals) s += "<" + p + "> ";
    for (const auto& o : c.required) s += "--" + o + " <" + o + "> ";
    for (const auto& o : c.optional) s += "[--" + o + " <" + o + ">] ";
    if (c.path.front() == "formula" && (c.path.back() == "eval")) s += "[--let name=literal]... ";
    return s + " # " + c.summary;
}

constexpr const char* kGrammar =
    "literals:\n"
    "  point    G2.<n>.x | G2.<n>.y | G1.<m>.y<i> | G1.<m>.x\n"
    "  cut      above(<point>) | all | none\n"
    "  element  0 | <num>[/<den>]@<point> joined by +\n"
    "  series   0 | [<scalar>*]t^(<element>) | <scalar>, joined by +; scalar a/b or (a/b+c/d i)\n"
    "  formula  Ex v. | All v. | & | ! | = < <= | Div_r(t) | + - * ^\n";

void render_text(const json& body, std::ostream& out) {
    if (!body.is_object()) {
        out << body.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : body.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

}  // namespace

const std::vector<Command>& dispatch_table() {
    static const std::vector<Command> table = build_table();
    return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hahn-sum, spine and valuation toolkit", "hahnctl"};
    app.require_subcommand(1);
    std::string format = "json";
    bool json_mode = false;
    app.add_option("--format", format, "output mode")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--json", json_mode, "compact JSON output (default; overrides --format)");

    std::vector<Args> parsed(dispatch_table().size());
    std::vector<CLI::App*> leaves(dispatch_table().size(), nullptr);
    std::map<std::vector<std::string>, CLI::App*> groups;

    for (std::size_t i = 0; i < dispatch_table().size(); ++i) {
        const Command& cmd = dispatch_table()[i];
        CLI::App* parent = &app;
        std::vector<std::string> prefix;
        for (std::size_t d = 0; d + 1 < cmd.path.size(); ++d) {
            prefix.push_back(cmd.path[d]);
            auto it = groups.find(prefix);
            if (it == groups.end()) {
                CLI::App* g = parent->add_subcommand(cmd.path[d]);
                g->require_subcommand(1);
                g->fallthrough();
                it = groups.emplace(prefix, g).first;
            }
            parent = it->second;
        }
        CLI::App* leaf = parent->add_subcommand(cmd.path.back(), cmd.summary);
        leaf->fallthrough();
        Args& slot = parsed[i];
        for (const auto& p : cmd.positionals) leaf->add_option(p, slot.values[p], p)->required();
        for (const auto& o : cmd.required) leaf->add_option("--" + o, slot.values[o])->required();
        for (const auto& o : cmd.optional) leaf->add_option("--" + o, slot.values[o]);
        if (cmd.path.front() == "formula" && cmd.path.back() == "eval") leaf->add_option("--let", slot.lets);
        leaves[i] = leaf;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << kGrammar;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\nusage:\n";
        for (const auto& cmd : dispatch_table()) err << "  " << command_usage(cmd) << '\n';
        err << kGrammar;
        return 2;
    }

    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (!leaves[i]->parsed()) continue;
        const Command& cmd = dispatch_table()[i];
        try {
            Outcome outcome = cmd.handler(parsed[i]);
            if (format == "text" && !json_mode) render_text(outcome.body, out);
            else out << outcome.body.dump() << '\n';
            return outcome.exit_code;
        } catch (const Error& e) {
            json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
            err << j.dump() << "\nusage: " << command_usage(cmd) << '\n' << kGrammar;
            return 2;
        }
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace hahn::cli
