#include "hahn/formula.hpp"

#include <algorithm>

#include "hahn/error.hpp"

namespace hahn::logic {

std::string_view to_string(Signature sig) { return sig == Signature::group ? "group" : "ring"; }

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

TermPtr var(std::string name) { return make_term({Term::Kind::var, std::move(name), 0, nullptr, nullptr}); }
TermPtr num(const mpz_class& n) {
    if (n < 0) return neg(num(-n));
    return make_term({Term::Kind::constant, {}, n, nullptr, nullptr});
}
TermPtr add(TermPtr a, TermPtr b) { return make_term({Term::Kind::add, {}, 0, std::move(a), std::move(b)}); }
TermPtr sub(TermPtr a, TermPtr b) { return make_term({Term::Kind::sub, {}, 0, std::move(a), std::move(b)}); }
TermPtr neg(TermPtr a) { return make_term({Term::Kind::neg, {}, 0, std::move(a), nullptr}); }
TermPtr mul(TermPtr a, TermPtr b) { return make_term({Term::Kind::mul, {}, 0, std::move(a), std::move(b)}); }
TermPtr pow(TermPtr base, unsigned exponent) {
    return make_term({Term::Kind::pow, {}, exponent, std::move(base), nullptr});
}

FormulaPtr eq(TermPtr a, TermPtr b) { return make_formula({Formula::Kind::eq, std::move(a), std::move(b), 0, {}, nullptr, nullptr}); }
FormulaPtr lt(TermPtr a, TermPtr b) { return make_formula({Formula::Kind::lt, std::move(a), std::move(b), 0, {}, nullptr, nullptr}); }
FormulaPtr le(TermPtr a, TermPtr b) { return make_formula({Formula::Kind::le, std::move(a), std::move(b), 0, {}, nullptr, nullptr}); }
FormulaPtr div_atom(int r, TermPtr t) {
    return make_formula({Formula::Kind::divisible, std::move(t), nullptr, r, {}, nullptr, nullptr});
}
FormulaPtr lnot(FormulaPtr f) { return make_formula({Formula::Kind::negation, nullptr, nullptr, 0, {}, std::move(f), nullptr}); }
FormulaPtr land(FormulaPtr a, FormulaPtr b) {
    return make_formula({Formula::Kind::conjunction, nullptr, nullptr, 0, {}, std::move(a), std::move(b)});
}
FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
    return make_formula({Formula::Kind::disjunction, nullptr, nullptr, 0, {}, std::move(a), std::move(b)});
}
FormulaPtr exists(std::string v, FormulaPtr body) {
    return make_formula({Formula::Kind::exists, nullptr, nullptr, 0, std::move(v), std::move(body), nullptr});
}
FormulaPtr forall(std::string v, FormulaPtr body) {
    return make_formula({Formula::Kind::forall, nullptr, nullptr, 0, std::move(v), std::move(body), nullptr});
}
FormulaPtr exists_all(std::initializer_list<std::string> vars, FormulaPtr body) {
    std::vector<std::string> names(vars);
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = exists(*it, std::move(body));
    return body;
}

bool same(const TermPtr& a, const TermPtr& b) {
    if (!a || !b) return !a && !b;
    return a->kind == b->kind && a->name == b->name && a->value == b->value && same(a->lhs, b->lhs) &&
           same(a->rhs, b->rhs);
}

bool same(const FormulaPtr& a, const FormulaPtr& b) {
    if (!a || !b) return !a && !b;
    return a->kind == b->kind && a->divisor == b->divisor && a->var == b->var && same(a->lhs, b->lhs) &&
           same(a->rhs, b->rhs) && same(a->a, b->a) && same(a->b, b->b);
}

namespace {

int precedence(const Term& t) {
    switch (t.kind) {
        case Term::Kind::add:
        case Term::Kind::sub: return 1;
        case Term::Kind::mul: return 2;
        case Term::Kind::neg: return 3;
        case Term::Kind::pow: return 4;
        case Term::Kind::var:
        case Term::Kind::constant: return 5;
    }
    return 5;
}

std::string print_term(const TermPtr& t, int min_prec) {
    std::string s;
    switch (t->kind) {
        case Term::Kind::var: s = t->name; break;
        case Term::Kind::constant: s = t->value.get_str(); break;
        case Term::Kind::add: s = print_term(t->lhs, 1) + " + " + print_term(t->rhs, 2); break;
        case Term::Kind::sub: s = print_term(t->lhs, 1) + " - " + print_term(t->rhs, 2); break;
        case Term::Kind::mul: s = print_term(t->lhs, 2) + "*" + print_term(t->rhs, 3); break;
        case Term::Kind::neg: s = "-" + print_term(t->lhs, 3); break;
        case Term::Kind::pow: s = print_term(t->lhs, 5) + "^" + t->value.get_str(); break;
    }
    return precedence(*t) < min_prec ? "(" + s + ")" : s;
}

int precedence(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::exists:
        case Formula::Kind::forall: return 0;
        case Formula::Kind::disjunction: return 1;
        case Formula::Kind::conjunction: return 2;
        case Formula::Kind::negation: return 3;
        default: return 4;
    }
}

std::string print_formula(const FormulaPtr& f, int min_prec) {
    std::string s;
    switch (f->kind) {
        case Formula::Kind::eq: s = print_term(f->lhs, 1) + " = " + print_term(f->rhs, 1); break;
        case Formula::Kind::lt: s = print_term(f->lhs, 1) + " < " + print_term(f->rhs, 1); break;
        case Formula::Kind::le: s = print_term(f->lhs, 1) + " <= " + print_term(f->rhs, 1); break;
        case Formula::Kind::divisible:
            s = "Div_" + std::to_string(f->divisor) + "(" + print_term(f->lhs, 1) + ")";
            break;
        case Formula::Kind::negation: s = "!" + print_formula(f->a, 5); break;
        case Formula::Kind::conjunction: s = print_formula(f->a, 2) + " & " + print_formula(f->b, 3); break;
        case Formula::Kind::disjunction: s = print_formula(f->a, 1) + " | " + print_formula(f->b, 2); break;
        case Formula::Kind::exists: s = "Ex " + f->var + ". " + print_formula(f->a, 0); break;
        case Formula::Kind::forall: s = "All " + f->var + ". " + print_formula(f->a, 0); break;
    }
    return precedence(*f) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const TermPtr& t) { return print_term(t, 0); }
std::string print(const FormulaPtr& f) { return print_formula(f, 0); }

std::optional<mpz_class> integer_literal(const TermPtr& t) {
    if (t->kind == Term::Kind::constant) return t->value;
    if (t->kind == Term::Kind::neg) {
        if (auto inner = integer_literal(t->lhs)) return mpz_class(-*inner);
    }
    return std::nullopt;
}

namespace {

void mismatch(Signature sig, const std::string& what) {
    throw Error(ErrorKind::SignatureMismatch, what + " is not in the " + std::string(to_string(sig)) + " signature");
}

void check_term(const TermPtr& t, Signature sig) {
    switch (t->kind) {
        case Term::Kind::var: return;
        case Term::Kind::constant:
            if (sig == Signature::group && t->value != 0) mismatch(sig, "constant " + t->value.get_str());
            return;
        case Term::Kind::add:
        case Term::Kind::sub:
            check_term(t->lhs, sig);
            check_term(t->rhs, sig);
            return;
        case Term::Kind::neg: check_term(t->lhs, sig); return;
        case Term::Kind::mul:
            if (sig == Signature::group) {
                if (!integer_literal(t->lhs)) mismatch(sig, "product " + print(t));
            } else {
                check_term(t->lhs, sig);
            }
            check_term(t->rhs, sig);
            return;
        case Term::Kind::pow:
            if (sig == Signature::group) mismatch(sig, "power " + print(t));
            check_term(t->lhs, sig);
            return;
    }
}

}  // namespace

void check_signature(const FormulaPtr& f, Signature sig) {
    switch (f->kind) {
        case Formula::Kind::eq:
            check_term(f->lhs, sig);
            check_term(f->rhs, sig);
            return;
        case Formula::Kind::lt:
        case Formula::Kind::le:
            if (sig == Signature::ring) mismatch(sig, "order atom");
            check_term(f->lhs, sig);
            check_term(f->rhs, sig);
            return;
        case Formula::Kind::divisible:
            if (sig == Signature::ring) mismatch(sig, "Div atom");
            divisor_from_int(f->divisor);
            check_term(f->lhs, sig);
            return;
        case Formula::Kind::negation:
        case Formula::Kind::exists:
        case Formula::Kind::forall: check_signature(f->a, sig); return;
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction:
            check_signature(f->a, sig);
            check_signature(f->b, sig);
            return;
    }
}

namespace {

void term_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == Term::Kind::var) out.insert(t->name);
    term_vars(t->lhs, out);
    term_vars(t->rhs, out);
}

void collect(const FormulaPtr& f, std::set<std::string>& bound_here, std::set<std::string>& free,
             std::set<std::string>& bound_anywhere) {
    switch (f->kind) {
        case Formula::Kind::eq:
        case Formula::Kind::lt:
        case Formula::Kind::le:
        case Formula::Kind::divisible: {
            std::set<std::string> vars;
            term_vars(f->lhs, vars);
            term_vars(f->rhs, vars);
            for (const auto& v : vars) {
                if (!bound_here.contains(v)) free.insert(v);
            }
            return;
        }
        case Formula::Kind::negation: collect(f->a, bound_here, free, bound_anywhere); return;
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction:
            collect(f->a, bound_here, free, bound_anywhere);
            collect(f->b, bound_here, free, bound_anywhere);
            return;
        case Formula::Kind::exists:
        case Formula::Kind::forall:
            if (bound_here.contains(f->var)) {
                throw Error(ErrorKind::ScopeError, "variable '" + f->var + "' re-bound inside its own scope");
            }
            bound_anywhere.insert(f->var);
            bound_here.insert(f->var);
            collect(f->a, bound_here, free, bound_anywhere);
            bound_here.erase(f->var);
            return;
    }
}

}  // namespace

void check_scoping(const FormulaPtr& f) {
    std::set<std::string> bound_here, free, bound_anywhere;
    collect(f, bound_here, free, bound_anywhere);
    for (const auto& v : free) {
        if (bound_anywhere.contains(v)) {
            throw Error(ErrorKind::ScopeError, "variable '" + v + "' occurs both free and bound");
        }
    }
}

std::set<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound_here, free, bound_anywhere;
    collect(f, bound_here, free, bound_anywhere);
    return free;
}

bool quantifier_free(const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::exists:
        case Formula::Kind::forall: return false;
        case Formula::Kind::negation: return quantifier_free(f->a);
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction: return quantifier_free(f->a) && quantifier_free(f->b);
        default: return true;
    }
}

namespace {

const Value& lookup(const Assignment& a, const std::string& name) {
    auto it = a.find(name);
    if (it == a.end()) throw Error(ErrorKind::UnboundVariable, "variable '" + name + "' is not assigned");
    return it->second;
}

ResidueField assignment_field(const Assignment& a) {
    for (const auto& [name, value] : a) {
        if (const auto* s = std::get_if<Series>(&value); s && s->field() == ResidueField::qi) {
            return ResidueField::qi;
        }
    }
    return ResidueField::q;
}

}  // namespace

GroupElement eval_group_term(const TermPtr& t, const Assignment& a) {
    switch (t->kind) {
        case Term::Kind::var: {
            const Value& v = lookup(a, t->name);
            if (const auto* g = std::get_if<GroupElement>(&v)) return *g;
            throw Error(ErrorKind::SignatureMismatch, "variable '" + t->name + "' holds a series, not a group element");
        }
        case Term::Kind::constant:
            if (t->value != 0) mismatch(Signature::group, "constant " + t->value.get_str());
            return GroupElement();
        case Term::Kind::add: return eval_group_term(t->lhs, a) + eval_group_term(t->rhs, a);
        case Term::Kind::sub: return eval_group_term(t->lhs, a) - eval_group_term(t->rhs, a);
        case Term::Kind::neg: return -eval_group_term(t->lhs, a);
        case Term::Kind::mul: {
            const auto k = integer_literal(t->lhs);
            if (!k) mismatch(Signature::group, "product " + print(t));
            return eval_group_term(t->rhs, a).scaled(*k);
        }
        case Term::Kind::pow: mismatch(Signature::group, "power " + print(t));
    }
    return GroupElement();
}

Series eval_ring_term(const TermPtr& t, const Assignment& a, ResidueField field) {
    switch (t->kind) {
        case Term::Kind::var: {
            const Value& v = lookup(a, t->name);
            const auto* s = std::get_if<Series>(&v);
            if (!s) throw Error(ErrorKind::SignatureMismatch, "variable '" + t->name + "' holds a group element, not a series");
            return field == ResidueField::qi && s->field() == ResidueField::q ? s->promoted() : *s;
        }
        case Term::Kind::constant: {
            const Scalar c = Scalar::rational(mpq_class(t->value));
            return Series::constant(field == ResidueField::qi ? c.promoted() : c);
        }
        case Term::Kind::add: return eval_ring_term(t->lhs, a, field) + eval_ring_term(t->rhs, a, field);
        case Term::Kind::sub: return eval_ring_term(t->lhs, a, field) - eval_ring_term(t->rhs, a, field);
        case Term::Kind::neg: return -eval_ring_term(t->lhs, a, field);
        case Term::Kind::mul: return eval_ring_term(t->lhs, a, field) * eval_ring_term(t->rhs, a, field);
        case Term::Kind::pow: return eval_ring_term(t->lhs, a, field).pow(static_cast<unsigned>(t->value.get_ui()));
    }
    return Series(field);
}

namespace {

bool eval_rec(const FormulaPtr& f, const Assignment& a, Structure s, ResidueField field) {
    switch (f->kind) {
        case Formula::Kind::eq:
            if (s == Structure::group) return eval_group_term(f->lhs, a) == eval_group_term(f->rhs, a);
            return eval_ring_term(f->lhs, a, field) == eval_ring_term(f->rhs, a, field);
        case Formula::Kind::lt:
        case Formula::Kind::le: {
            if (s != Structure::group) mismatch(Signature::ring, "order atom");
            const auto c = eval_group_term(f->lhs, a) <=> eval_group_term(f->rhs, a);
            return f->kind == Formula::Kind::lt ? c < 0 : c <= 0;
        }
        case Formula::Kind::divisible:
            if (s != Structure::group) mismatch(Signature::ring, "Div atom");
            return divisible(eval_group_term(f->lhs, a), divisor_from_int(f->divisor));
        case Formula::Kind::negation: return !eval_rec(f->a, a, s, field);
        case Formula::Kind::conjunction: return eval_rec(f->a, a, s, field) && eval_rec(f->b, a, s, field);
        case Formula::Kind::disjunction: return eval_rec(f->a, a, s, field) || eval_rec(f->b, a, s, field);
        case Formula::Kind::exists:
        case Formula::Kind::forall:
            throw Error(ErrorKind::QuantifierPresent, "eval_qf on quantified formula: " + print(f));
    }
    return false;
}

}  // namespace

bool eval_qf(const FormulaPtr& phi, const Assignment& a, Structure s) {
    if (!quantifier_free(phi)) {
        throw Error(ErrorKind::QuantifierPresent, "eval_qf on quantified formula: " + print(phi));
    }
    for (const auto& v : free_variables(phi)) lookup(a, v);
    return eval_rec(phi, a, s, assignment_field(a));
}

}  // namespace hahn::logic
