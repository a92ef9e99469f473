#include "hahn/group.hpp"

#include <algorithm>

#include "hahn/error.hpp"

namespace hahn {

namespace {

void check_tag(const IndexPoint& p, const Coeff& c) {
    if (c.tag() != tag_for(label(p))) {
        throw Error(ErrorKind::TagMismatch, "coefficient " + c.str() + " tagged " +
                                                std::string(to_string(c.tag())) +
                                                " placed at " + p.str());
    }
}

}  // namespace

GroupElement GroupElement::monomial(const IndexPoint& p, const Coeff& c) {
    check_tag(p, c);
    GroupElement g;
    if (!c.is_zero()) g.terms_.emplace_back(p, c);
    return g;
}

GroupElement GroupElement::from_terms(std::vector<Term> terms) {
    for (const auto& [p, c] : terms) check_tag(p, c);
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.first < b.first; });
    GroupElement g;
    for (auto& [p, c] : terms) {
        if (!g.terms_.empty() && g.terms_.back().first == p) {
            g.terms_.back().second = g.terms_.back().second + c;
            if (g.terms_.back().second.is_zero()) g.terms_.pop_back();
        } else if (!c.is_zero()) {
            g.terms_.emplace_back(p, std::move(c));
        }
    }
    return g;
}

const IndexPoint& GroupElement::leading_point() const {
    if (terms_.empty()) throw Error(ErrorKind::Precondition, "zero has no leading point");
    return terms_.front().first;
}

Coeff GroupElement::at(const IndexPoint& p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const IndexPoint& q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) return it->second;
    return Coeff::integer(0, tag_for(label(p)));
}

GroupElement GroupElement::operator-() const {
    GroupElement g;
    g.terms_.reserve(terms_.size());
    for (const auto& [p, c] : terms_) g.terms_.emplace_back(p, -c);
    return g;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    GroupElement out;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            out.terms_.push_back(*j++);
        } else {
            Coeff s = i->second + j->second;
            if (!s.is_zero()) out.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement GroupElement::scaled(const mpz_class& k) const {
    GroupElement g;
    if (k == 0) return g;
    g.terms_.reserve(terms_.size());
    for (const auto& [p, c] : terms_) g.terms_.emplace_back(p, c.scaled(k));
    return g;
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    // The sign of a - b is decided at the first point where a and b differ.
    auto from_sign = [](int s) {
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (i->first < j->first) return from_sign(i->second.sign());
        if (j->first < i->first) return from_sign(-j->second.sign());
        if (auto c = i->second <=> j->second; c != 0) return c;
        ++i;
        ++j;
    }
    if (i != a.terms_.end()) return from_sign(i->second.sign());
    if (j != b.terms_.end()) return from_sign(-j->second.sign());
    return std::strong_ordering::equal;
}

std::string GroupElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "@" + p.str();
    }
    return s;
}

bool divisible(const GroupElement& a, Divisor r) {
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [r](const GroupElement::Term& t) { return t.second.divisible_by(r); });
}

IndexPoint leading_obstruction(const GroupElement& a, Divisor r) {
    for (const auto& [p, c] : a.terms()) {
        if (!c.divisible_by(r)) return p;
    }
    throw Error(ErrorKind::DivisibleElement,
                a.str() + " lies in " + std::to_string(to_int(r)) + "Γ");
}

Cut fr(const GroupElement& a, Divisor r) { return Cut::above(leading_obstruction(a, r)); }

namespace {

// c/r lies in c's localization iff the reduced denominator of c/r avoids the
// localizing prime. Deliberately a different computation from
// Coeff::divisible_by.
bool quotient_in_localization(const Coeff& c, Divisor r) {
    mpq_class q = c.value() / to_int(r);
    q.canonicalize();
    const unsigned long p = c.tag() == LocalTag::x2 ? 2 : 3;
    return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

}  // namespace

LemmaResult lemma_rhs(const GroupElement& x, const GroupElement& y, Divisor r) {
    // First point where x's coefficient has no r-th part: every z in x + rΓ
    // has a nonzero coefficient there, and may be zeroed everywhere above it.
    const GroupElement::Term* obstruction = nullptr;
    for (const auto& term : x.terms()) {
        if (!quotient_in_localization(term.second, r)) {
            obstruction = &term;
            break;
        }
    }
    if (obstruction == nullptr) {
        throw Error(ErrorKind::DivisibleElement,
                    x.str() + " lies in " + std::to_string(to_int(r)) + "Γ");
    }
    const IndexPoint& j0 = obstruction->first;

    // Interval [0, 0] = {0}, and 0 is not in the coset.
    if (y.is_zero()) return {true, std::nullopt};

    const GroupElement bound = y.abs().scaled(to_int(r));
    const IndexPoint& lead = bound.leading_point();
    // Every coset element is nonzero at or before j0, so if the bound only
    // starts after j0 each positive coset element already exceeds it.
    if (lead > j0) return {true, std::nullopt};

    // Otherwise: drop x's (divisible) coefficients before j0, place a small
    // positive coset representative at j0, keep x's tail unchanged.
    const Coeff hi = lead == j0 ? bound.terms().front().second : Coeff::integer(1, obstruction->second.tag());
    const Coeff c = coeff_coset_witness(obstruction->second, r, hi);

    std::vector<GroupElement::Term> terms;
    terms.emplace_back(j0, c);
    for (const auto& [p, coeff] : x.terms()) {
        if (p > j0) terms.emplace_back(p, coeff);
    }
    return {false, GroupElement::from_terms(std::move(terms))};
}

bool sim_r(const GroupElement& a, const GroupElement& b, Divisor r) { return fr(a, r) == fr(b, r); }

GroupElement gamma1_probe() {
    return GroupElement::monomial(definable_k(), Coeff::integer(1, LocalTag::y3));
}

bool in_gamma1_direct(const GroupElement& y) {
    return std::all_of(y.terms().begin(), y.terms().end(),
                       [](const GroupElement::Term& t) { return t.first.in_gamma1(); });
}

bool in_gamma1_definable(const GroupElement& y) {
    return lemma_rhs(gamma1_probe(), y, Divisor::six).empty;
}

GroupElement project_quotient(const GroupElement& a, const Cut& c) {
    std::vector<GroupElement::Term> kept;
    for (const auto& t : a.terms()) {
        if (!c.contains(t.first)) kept.push_back(t);
    }
    return GroupElement::from_terms(std::move(kept));
}

GroupElement parse_element(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto read_digits = [&](std::string& out) {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out.push_back(text[pos++]);
        if (pos == start) throw SyntaxError(pos, "expected digits");
    };

    std::vector<GroupElement::Term> terms;
    bool negate = false;
    while (true) {
        skip_ws();
        std::string literal;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            if (text[pos] == '-') literal.push_back('-');
            ++pos;
        }
        read_digits(literal);
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            literal.push_back('/');
            read_digits(literal);
            skip_ws();
        }
        if (pos >= text.size() || text[pos] != '@') {
            if (pos >= text.size() && terms.empty() && !negate && literal == "0") {
                return GroupElement();
            }
            throw SyntaxError(pos, "expected '@' after coefficient");
        }
        ++pos;
        skip_ws();
        const IndexPoint p = parse_point_at(text, pos);
        const Coeff c = parse_coeff(literal, tag_for(label(p)));
        terms.emplace_back(p, negate ? -c : c);

        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') {
            throw SyntaxError(pos, "expected '+' between terms");
        }
        negate = text[pos] == '-';
        ++pos;
    }
    return GroupElement::from_terms(std::move(terms));
}

}  // namespace hahn
