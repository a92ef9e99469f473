#include "hahn/eta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hahn/error.hpp"

namespace hahn::logic {

FormulaPtr eta() {
    auto inverse_atom = [](const std::string& inv, const std::string& base) {
        return eq(mul(var(inv), sub(pow(var(base), 3), num(2))), num(1));
    };
    FormulaPtr first = exists_all(
        {"y", "z", "y1", "z1"},
        land(land(eq(var("u"), sub(var("y1"), var("z1"))), inverse_atom("y1", "y")), inverse_atom("z1", "z")));
    FormulaPtr second = exists_all(
        {"y_2", "z_2", "y1_2", "z1_2"},
        lor(eq(var("t"), num(0)),
            land(land(eq(var("t"), mul(var("y1_2"), var("z1_2"))), inverse_atom("y1_2", "y_2")),
                 inverse_atom("z1_2", "z_2"))));
    return exists_all({"u", "t"}, land(land(eq(var("x"), add(var("u"), var("t"))), first), second));
}

namespace {

/// A series known up to terms of value >= precision.
struct Approx {
    Series value;
    ExtValue precision = ExtValue::infinity();
};

ExtValue min_value(const ExtValue& a, const ExtValue& b) { return a <= b ? a : b; }

Approx operator+(const Approx& a, const Approx& b) {
    return {a.value + b.value, min_value(a.precision, b.precision)};
}
Approx operator-(const Approx& a) { return {-a.value, a.precision}; }
Approx operator*(const Approx& a, const Approx& b) {
    // (a + δa)(b + δb) - ab = a·δb + δa·b + δa·δb
    const ExtValue p = min_value(min_value(val(a.value) + b.precision, a.precision + val(b.value)),
                                 a.precision + b.precision);
    return {a.value * b.value, p};
}

using Env = std::map<std::string, Approx, std::less<>>;

Approx eval_term(const TermPtr& t, const Env& env, ResidueField field) {
    switch (t->kind) {
        case Term::Kind::var: {
            auto it = env.find(t->name);
            if (it == env.end()) throw Error(ErrorKind::UnboundVariable, "no witness for '" + t->name + "'");
            return it->second;
        }
        case Term::Kind::constant: {
            const Scalar c = Scalar::rational(mpq_class(t->value));
            return {Series::constant(field == ResidueField::qi ? c.promoted() : c)};
        }
        case Term::Kind::add: return eval_term(t->lhs, env, field) + eval_term(t->rhs, env, field);
        case Term::Kind::sub: return eval_term(t->lhs, env, field) + -eval_term(t->rhs, env, field);
        case Term::Kind::neg: return -eval_term(t->lhs, env, field);
        case Term::Kind::mul: return eval_term(t->lhs, env, field) * eval_term(t->rhs, env, field);
        case Term::Kind::pow: {
            const Approx base = eval_term(t->lhs, env, field);
            Approx acc{Series::one(field)};
            for (unsigned long i = 0; i < t->value.get_ui(); ++i) acc = acc * base;
            return acc;
        }
    }
    return {Series(field)};
}

// Existentials read their value from the environment instead of searching.
bool eval_witnessed(const FormulaPtr& f, const Env& env, ResidueField field) {
    switch (f->kind) {
        case Formula::Kind::eq: {
            const Approx residual = eval_term(f->lhs, env, field) + -eval_term(f->rhs, env, field);
            return val(residual.value) >= residual.precision;
        }
        case Formula::Kind::negation: return !eval_witnessed(f->a, env, field);
        case Formula::Kind::conjunction: return eval_witnessed(f->a, env, field) && eval_witnessed(f->b, env, field);
        case Formula::Kind::disjunction: return eval_witnessed(f->a, env, field) || eval_witnessed(f->b, env, field);
        case Formula::Kind::exists:
            if (!env.contains(f->var)) throw Error(ErrorKind::UnboundVariable, "no witness for '" + f->var + "'");
            return eval_witnessed(f->a, env, field);
        case Formula::Kind::forall:
            throw Error(ErrorKind::QuantifierPresent, "universal quantifier in witnessed formula");
        case Formula::Kind::lt:
        case Formula::Kind::le:
        case Formula::Kind::divisible:
            throw Error(ErrorKind::SignatureMismatch, "group atom in a ring formula");
    }
    return false;
}

/// 1/(y³ - 2) either exactly as given or truncated after `iterations` terms,
/// in which case the error has value >= -γ + (iterations+1)·v(ε).
Approx inverse_witness(const Series& base, const std::optional<Series>& given, unsigned iterations) {
    if (given) return {*given};
    const Series cubic = base.pow(3) - Series::constant(Scalar::integer(2, base.field()));
    const UnitDecomposition d = decompose_unit(cubic);
    Approx out{s_inverse(cubic, iterations)};
    if (!d.epsilon.is_zero()) {
        out.precision = ExtValue::of(val(d.epsilon).element().scaled(iterations + 1) - d.shift);
    }
    return out;
}

}  // namespace

bool check_eta_witness(const Series& x, const std::pair<Series, Series>& ut, const EtaBlock& first,
                       const EtaBlock& second, unsigned iterations) {
    const ResidueField field = x.field();
    std::vector<const Series*> all{&x, &ut.first, &ut.second, &first.y, &first.z, &second.y, &second.z};
    for (const EtaBlock* b : {&first, &second}) {
        if (b->y1) all.push_back(&*b->y1);
        if (b->z1) all.push_back(&*b->z1);
    }
    for (const Series* s : all) {
        if (s->field() != field) throw Error(ErrorKind::TagMismatch, "eta witnesses over different residue fields");
    }

    Env env;
    env["x"] = {x};
    env["u"] = {ut.first};
    env["t"] = {ut.second};
    env["y"] = {first.y};
    env["z"] = {first.z};
    env["y1"] = inverse_witness(first.y, first.y1, iterations);
    env["z1"] = inverse_witness(first.z, first.z1, iterations);
    env["y_2"] = {second.y};
    env["z_2"] = {second.z};
    env["y1_2"] = inverse_witness(second.y, second.y1, iterations);
    env["z1_2"] = inverse_witness(second.z, second.z1, iterations);
    return eval_witnessed(eta(), env, field);
}

FormulaPtr fr_formula(Divisor r) {
    const int rv = to_int(r);
    FormulaPtr nonneg = lnot(lt(var("z"), num(0)));
    FormulaPtr below = lor(le(var("z"), mul(num(rv), var("y"))), le(var("z"), mul(num(-rv), var("y"))));
    FormulaPtr in_coset = div_atom(rv, sub(var("z"), var("x")));
    return lnot(exists("z", land(land(nonneg, below), in_coset)));
}

bool eval_fr_pattern(const FormulaPtr& f, const Assignment& a) {
    for (Divisor r : {Divisor::two, Divisor::three, Divisor::six}) {
        if (!same(f, fr_formula(r))) continue;
        const GroupElement x = eval_group_term(var("x"), a);
        const GroupElement y = eval_group_term(var("y"), a);
        const LemmaResult result = lemma_rhs(x, y, r);
        if (!result.empty) {
            // The witness must satisfy the existential's matrix.
            Assignment with_z = a;
            with_z.insert_or_assign("z", *result.witness);
            if (!eval_qf(f->a->a, with_z, Structure::group)) {
                throw std::logic_error("lemma_rhs witness " + result.witness->str() + " fails " + print(f->a->a));
            }
        }
        return result.empty;
    }
    throw Error(ErrorKind::Precondition, "not an F_r membership formula: " + print(f));
}

bool eval_fr_formula(const GroupElement& x, const GroupElement& y, Divisor r) {
    Assignment a;
    a.emplace("x", x);
    a.emplace("y", y);
    return eval_fr_pattern(fr_formula(r), a);
}

}  // namespace hahn::logic
