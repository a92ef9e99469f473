#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "hahn/eta.hpp"
#include "hahn/sampling.hpp"
#include "support.hpp"

using namespace hahn;
using namespace hahn::logic;

namespace {

Series q(long num, long den = 1) { return Series::constant(Scalar::rational(num, den)); }
Series zero() { return Series(ResidueField::q); }
GroupElement e(std::string_view text) { return parse_element(text); }

EtaBlock trivial_block() { return {zero(), zero(), q(-1, 2), q(-1, 2)}; }

// Finds rationals y, z with numerator and denominator bounded by 20 and
// 1/(y^3 - 2) - 1/(z^3 - 2) = target.
std::optional<std::pair<mpq_class, mpq_class>> search_u(const mpq_class& target) {
    std::map<mpq_class, mpq_class> inverse_of;
    for (long den = 1; den <= 20; ++den) {
        for (long num = -20; num <= 20; ++num) {
            mpq_class y(num, den);
            y.canonicalize();
            const mpq_class cubic = y * y * y - 2;
            inverse_of.emplace(1 / cubic, y);
        }
    }
    for (const auto& [z_inv, z] : inverse_of) {
        auto it = inverse_of.find(target + z_inv);
        if (it != inverse_of.end()) return std::pair{it->second, z};
    }
    return std::nullopt;
}

// Finds rationals y, z in the same range with (y^3 - 2)(z^3 - 2) = 1 / target.
std::optional<std::pair<mpq_class, mpq_class>> search_t(const mpq_class& target) {
    std::vector<mpq_class> values;
    for (long den = 1; den <= 20; ++den) {
        for (long num = -20; num <= 20; ++num) {
            mpq_class y(num, den);
            y.canonicalize();
            values.push_back(y);
        }
    }
    for (const auto& y : values) {
        for (const auto& z : values) {
            if ((y * y * y - 2) * (z * z * z - 2) * target == 1) return std::pair{y, z};
        }
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("eta shape") {
    const FormulaPtr f = eta();
    const std::string text = print(f);
    CHECK(text.find("y1*(y^3 - 2) = 1") != std::string::npos);
    CHECK(free_variables(f) == std::set<std::string>{"x"});
    // Ex u. Ex t. (x = u + t & first) & second
    const FormulaPtr body = f->a->a;
    const FormulaPtr second = body->b;
    REQUIRE(second->kind == Formula::Kind::exists);
    const FormulaPtr matrix = second->a->a->a->a;
    REQUIRE(matrix->kind == Formula::Kind::disjunction);
    CHECK(print(matrix->a) == "t = 0");
    CHECK(same(parse(text, Signature::ring), f));
}

TEST_CASE("trivial witness for x = 0") {
    CHECK(check_eta_witness(zero(), {zero(), zero()}, trivial_block(), trivial_block(), 0));
    EtaBlock bad = trivial_block();
    bad.y1 = q(-1, 3);
    CHECK_FALSE(check_eta_witness(zero(), {zero(), zero()}, bad, trivial_block(), 0));
}

TEST_CASE("single-component tampering") {
    const auto run = [](const Series& x, const Series& u, const Series& t, const EtaBlock& b1, const EtaBlock& b2) {
        return check_eta_witness(x, {u, t}, b1, b2, 2);
    };
    const Series one = q(1);
    CHECK_FALSE(run(one, zero(), zero(), trivial_block(), trivial_block()));
    CHECK_FALSE(run(zero(), one, zero(), trivial_block(), trivial_block()));
    CHECK_FALSE(run(zero(), zero(), one, trivial_block(), trivial_block()));
    for (int which = 0; which < 4; ++which) {
        EtaBlock b = trivial_block();
        Series* slot = which == 0 ? &b.y : which == 1 ? &b.z : which == 2 ? &*b.y1 : &*b.z1;
        *slot = *slot + one;
        CHECK_FALSE(run(zero(), zero(), zero(), b, trivial_block()));
        CHECK_FALSE(run(zero(), zero(), zero(), b, b));
        // With t = 0 the second block's matrix holds through its first disjunct.
        CHECK(run(zero(), zero(), zero(), trivial_block(), b));
    }
}

TEST_CASE("x = 1 witness found by bounded search") {
    // u = 1 would need 1/(y^3 - 2) - 1/(z^3 - 2) = 1; no small rationals do it.
    CHECK_FALSE(search_u(1));
    // Replacement instance: u = 0 from the trivial block and t = 1 = y1*z1 in the second block.
    const auto found = search_t(1);
    REQUIRE(found);
    const auto [y, z] = *found;
    const Series ys = Series::constant(Scalar::rational(y));
    const Series zs = Series::constant(Scalar::rational(z));
    const EtaBlock second{ys, zs, std::nullopt, std::nullopt};
    CHECK(check_eta_witness(q(1), {zero(), q(1)}, trivial_block(), second, 0));
    const EtaBlock exact{ys, zs, Series::constant(Scalar::rational(1 / (y * y * y - 2))),
                         Series::constant(Scalar::rational(1 / (z * z * z - 2)))};
    CHECK(check_eta_witness(q(1), {zero(), q(1)}, trivial_block(), exact, 0));
    CHECK_FALSE(check_eta_witness(q(1), {zero(), q(2)}, trivial_block(), exact, 0));
}

TEST_CASE("inverse requests") {
    const EtaBlock requested{zero(), zero(), std::nullopt, std::nullopt};
    CHECK(check_eta_witness(zero(), {zero(), zero()}, requested, requested, 0));
    // y = t^γ with γ > 0: y^3 - 2 is a unit with nonzero tail, so the inverse is truncated.
    const Series small = Series::monomial(e("1@G2.0.x"), Scalar::rational(1));
    const EtaBlock same_y{small, small, std::nullopt, std::nullopt};
    for (unsigned n = 0; n <= 4; ++n) CHECK(check_eta_witness(zero(), {zero(), zero()}, same_y, requested, n));
}

TEST_CASE("acceptance is monotone in iterations for exact and symmetric witnesses") {
    const SampleRng root(51);
    for (std::uint64_t i = 0; i < 100; ++i) {
        SampleRng rng = root.split(i);
        const Series y = sample::series_in_Ow(rng, ResidueField::q);
        const EtaBlock sym{y, y, std::nullopt, std::nullopt};
        const EtaBlock exact{zero(), zero(), q(-1, 2), q(-1, 2)};
        bool seen_true = false;
        for (unsigned n = 0; n <= 4; ++n) {
            const bool ok = check_eta_witness(zero(), {zero(), zero()}, sym, exact, n);
            if (seen_true) CHECK(ok);
            seen_true = seen_true || ok;
        }
        CHECK(seen_true);
    }
}

TEST_CASE("residue fields must agree") {
    const Series gi = Series::constant(Scalar::gaussian(0, 1));
    CHECK(kind_of([&] { (void)check_eta_witness(gi, {zero(), zero()}, trivial_block(), trivial_block(), 0); }) ==
          ErrorKind::TagMismatch);
    const Series z = Series(ResidueField::qi);
    const Series h = Series::constant(Scalar::gaussian(mpq_class(-1, 2), 0));
    const EtaBlock b{z, z, h, h};
    CHECK(check_eta_witness(z, {z, z}, b, b, 0));
}

TEST_CASE("F_r membership formula") {
    CHECK(print(fr_formula(Divisor::six)) == "!(Ex z. !(z < 0) & (z <= 6*y | z <= -6*y) & Div_6(z - x))");
    CHECK(eval_fr_formula(e("1@G2.0.y"), e("1@G1.3.x"), Divisor::six));
    CHECK_FALSE(eval_fr_formula(e("1@G2.0.y"), e("1@G2.0.y"), Divisor::six));
    CHECK(eval_fr_formula(e("1@G1.0.y0"), GroupElement(), Divisor::three));
    CHECK(kind_of([] { (void)eval_fr_formula(e("3@G1.0.y0"), GroupElement(), Divisor::three); }) ==
          ErrorKind::DivisibleElement);
    Assignment a;
    a.emplace("x", e("1@G2.0.y"));
    a.emplace("y", e("1@G1.0.y0"));
    CHECK(eval_fr_pattern(parse("!(Ex z. !(z < 0) & (z <= 6*y | z <= -6*y) & Div_6(z - x))", Signature::group), a));
    CHECK(kind_of([&] { (void)eval_fr_pattern(parse("Ex z. z < x", Signature::group), a); }) ==
          ErrorKind::Precondition);
}

TEST_CASE("F_r formula agrees with cut membership") {
    const SampleRng root(52);
    for (std::uint64_t i = 0; i < 2000; ++i) {
        SampleRng rng = root.split(i);
        const Divisor r = rng.coin() ? Divisor::three : Divisor::six;
        const GroupElement x = sample::nondivisible(rng, r);
        const GroupElement y = sample::element(rng);
        const Cut c = fr(x, r);
        bool inside = true;
        for (const auto& [p, coeff] : y.terms()) inside = inside && cut_member(p, c);
        CHECK(eval_fr_formula(x, y, r) == inside);
    }
}
