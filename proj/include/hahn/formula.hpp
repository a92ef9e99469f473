#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hahn/group.hpp"
#include "hahn/series.hpp"

namespace hahn::logic {

/// L_oag (0, +, −, <, integer multiples, Div_r) or L_ring (0, 1, +, −, ·, ^).
enum class Signature { group, ring };

std::string_view to_string(Signature sig);

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
    enum class Kind { var, constant, add, sub, neg, mul, pow };

    Kind kind;
    std::string name;     // var
    mpz_class value;      // constant, or the exponent of pow
    TermPtr lhs, rhs;     // rhs unused by neg and pow
};

struct Formula {
    enum class Kind { eq, lt, le, divisible, negation, conjunction, disjunction, exists, forall };

    Kind kind;
    TermPtr lhs, rhs;     // atoms; divisible uses lhs only
    int divisor = 0;      // divisible
    std::string var;      // quantifiers
    FormulaPtr a, b;      // connectives and quantifier bodies (a)
};

// Builders.
TermPtr var(std::string name);
TermPtr num(const mpz_class& n);
TermPtr add(TermPtr a, TermPtr b);
TermPtr sub(TermPtr a, TermPtr b);
TermPtr neg(TermPtr a);
TermPtr mul(TermPtr a, TermPtr b);
TermPtr pow(TermPtr base, unsigned exponent);

FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr lt(TermPtr a, TermPtr b);
FormulaPtr le(TermPtr a, TermPtr b);
FormulaPtr div_atom(int r, TermPtr t);
FormulaPtr lnot(FormulaPtr f);
FormulaPtr land(FormulaPtr a, FormulaPtr b);
FormulaPtr lor(FormulaPtr a, FormulaPtr b);
FormulaPtr exists(std::string v, FormulaPtr body);
FormulaPtr forall(std::string v, FormulaPtr body);
/// exists v1. exists v2. … body
FormulaPtr exists_all(std::initializer_list<std::string> vars, FormulaPtr body);

bool same(const TermPtr& a, const TermPtr& b);
bool same(const FormulaPtr& a, const FormulaPtr& b);

std::string print(const TermPtr& t);
/// Canonical text: minimal parentheses (left-associative connectives and
/// operators), negated atoms and nested quantifiers parenthesized.
std::string print(const FormulaPtr& f);

/// Parses and validates signature and scoping. Throws SyntaxError,
/// SignatureMismatch or ScopeError.
FormulaPtr parse(std::string_view text, Signature sig);
TermPtr parse_term(std::string_view text, Signature sig);

/// Throws SignatureMismatch on symbols outside the signature.
void check_signature(const FormulaPtr& f, Signature sig);
/// No binder re-binds a name already bound around it, and no name occurs
/// both free and bound. Throws ScopeError.
void check_scoping(const FormulaPtr& f);

std::set<std::string> free_variables(const FormulaPtr& f);
bool quantifier_free(const FormulaPtr& f);

/// A literal integer (possibly negated constant), for group scalar multiples.
std::optional<mpz_class> integer_literal(const TermPtr& t);

using Value = std::variant<GroupElement, Series>;
using Assignment = std::map<std::string, Value, std::less<>>;

/// The group Γ or the field k((Γ)) (group-ring fragment).
enum class Structure { group, series };

/// Tarski satisfaction of a quantifier-free formula. Throws
/// QuantifierPresent, UnboundVariable, SignatureMismatch.
bool eval_qf(const FormulaPtr& phi, const Assignment& a, Structure s);

GroupElement eval_group_term(const TermPtr& t, const Assignment& a);
Series eval_ring_term(const TermPtr& t, const Assignment& a, ResidueField field);

}  // namespace hahn::logic
