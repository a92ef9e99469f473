#include "hahn/series.hpp"

#include <map>

#include "hahn/error.hpp"

namespace hahn {

const GroupElement& ExtValue::element() const {
    if (!finite_) throw Error(ErrorKind::Precondition, "infinite value has no group element");
    return *finite_;
}

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity() || b.is_infinity()) return ExtValue::infinity();
    return ExtValue::of(*a.finite_ + *b.finite_);
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinity() || b.is_infinity()) {
        return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
    }
    return *a.finite_ <=> *b.finite_;
}

namespace {

void require_same_field(const Series& a, const Series& b) {
    if (a.field() != b.field()) {
        throw Error(ErrorKind::TagMismatch, "series over different residue fields: " +
                                                std::string(to_string(a.field())) + " vs " +
                                                std::string(to_string(b.field())));
    }
}

}  // namespace

Series Series::monomial(const GroupElement& exponent, const Scalar& c) {
    Series s(c.field());
    if (!c.is_zero()) s.terms_.emplace_back(exponent, c);
    return s;
}

Series Series::from_terms(ResidueField field, std::vector<Term> terms) {
    std::map<GroupElement, Scalar> acc;
    for (auto& [e, c] : terms) {
        if (c.field() != field) {
            throw Error(ErrorKind::TagMismatch, "scalar " + c.str() + " is not in " +
                                                    std::string(to_string(field)));
        }
        auto [it, inserted] = acc.try_emplace(e, c);
        if (!inserted) it->second = it->second + c;
    }
    Series s(field);
    for (auto& [e, c] : acc) {
        if (!c.is_zero()) s.terms_.emplace_back(e, std::move(c));
    }
    return s;
}

Series Series::promoted() const {
    Series s(ResidueField::qi);
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e, c.promoted());
    return s;
}

Series Series::operator-() const {
    Series s(field_);
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e, -c);
    return s;
}

Series operator+(const Series& a, const Series& b) {
    require_same_field(a, b);
    Series out(a.field_);
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            out.terms_.push_back(*j++);
        } else {
            Scalar s = i->second + j->second;
            if (!s.is_zero()) out.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    require_same_field(a, b);
    std::vector<Series::Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) products.emplace_back(ea + eb, ca * cb);
    }
    return Series::from_terms(a.field_, std::move(products));
}

Series Series::pow(unsigned n) const {
    Series result = one(field_);
    Series base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (e.is_zero()) {
            s += c.str();
            continue;
        }
        if (c.is_one()) {
            // unit scalar elided
        } else if (c.field() == ResidueField::q && c.re() == -1) {
            s += "-";
        } else {
            s += c.str() + "*";
        }
        s += "t^(" + e.str() + ")";
    }
    return s;
}

ExtValue val(const Series& a) {
    if (a.is_zero()) return ExtValue::infinity();
    return ExtValue::of(a.terms().front().first);
}

ExtValue w_val(const Series& a) {
    if (a.is_zero()) return ExtValue::infinity();
    return ExtValue::of(project_quotient(a.terms().front().first, gamma1_cut()));
}

bool in_O(const Series& a, ValuationKind kind) {
    const ExtValue value = kind == ValuationKind::v ? val(a) : w_val(a);
    return value >= ExtValue::of(GroupElement());
}

Series residue_w(const Series& a) {
    if (!in_O(a, ValuationKind::w)) {
        throw Error(ErrorKind::NotInValuationRing, a.str() + " has negative w-value");
    }
    const Cut cut = gamma1_cut();
    std::vector<Series::Term> kept;
    for (const auto& term : a.terms()) {
        if (project_quotient(term.first, cut).is_zero()) kept.push_back(term);
    }
    return Series::from_terms(a.field(), std::move(kept));
}

UnitDecomposition decompose_unit(const Series& a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroDivision, "zero series has no unit part");
    const auto& [shift, lead] = a.terms().front();
    const Series normalized = a * Series::monomial(-shift, lead.inverse());
    return {lead, shift, normalized - Series::one(a.field())};
}

Series s_inverse(const Series& a, unsigned iterations) {
    const UnitDecomposition d = decompose_unit(a);
    const Series minus_eps = -d.epsilon;
    Series sum = Series::one(a.field());
    Series power = sum;
    for (unsigned i = 1; i <= iterations; ++i) {
        power = power * minus_eps;
        sum = sum + power;
    }
    return Series::monomial(-d.shift, d.lead.inverse()) * sum;
}

std::string_view to_string(FieldEmbedding id) { return id == FieldEmbedding::f ? "f" : "g"; }

FieldEmbedding parse_field_embedding(std::string_view text) {
    if (text == "f") return FieldEmbedding::f;
    if (text == "g") return FieldEmbedding::g;
    throw Error(ErrorKind::Precondition, "field embedding must be f or g, got '" +
                                             std::string(text) + "'");
}

Series apply_field_embedding(FieldEmbedding id, const Series& a) {
    const EmbeddingId exp_map = exponent_map(id);
    std::vector<Series::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& [e, c] : a.terms()) terms.emplace_back(apply_embedding(exp_map, e), c);
    return Series::from_terms(a.field(), std::move(terms));
}

namespace {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    Series parse() {
        std::vector<Series::Term> terms;
        bool any_gaussian = false;
        bool negate = false;
        skip_ws();
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        while (true) {
            auto [exponent, scalar] = term();
            any_gaussian = any_gaussian || scalar.field() == ResidueField::qi;
            terms.emplace_back(std::move(exponent), negate ? -scalar : scalar);
            skip_ws();
            if (pos_ >= text_.size()) break;
            if (peek() != '+' && peek() != '-') throw SyntaxError(pos_, "expected '+' between terms");
            negate = peek() == '-';
            ++pos_;
        }
        const ResidueField field = any_gaussian ? ResidueField::qi : ResidueField::q;
        for (auto& term : terms) {
            if (field == ResidueField::qi) term.second = term.second.promoted();
        }
        return Series::from_terms(field, std::move(terms));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    mpq_class rational() {
        skip_ws();
        std::string lit;
        if (peek() == '-' || peek() == '+') {
            if (peek() == '-') lit.push_back('-');
            ++pos_;
            skip_ws();
        }
        digits(lit);
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            lit.push_back('/');
            skip_ws();
            digits(lit);
        }
        mpq_class q(lit);
        if (q.get_den() == 0) throw Error(ErrorKind::ZeroDivision, "zero denominator in " + lit);
        q.canonicalize();
        return q;
    }

    void digits(std::string& out) {
        const std::size_t start = pos_;
        while (peek() >= '0' && peek() <= '9') out.push_back(text_[pos_++]);
        if (pos_ == start) throw SyntaxError(pos_, "expected digits");
    }

    Scalar scalar() {
        skip_ws();
        if (peek() != '(') return Scalar::rational(rational());
        ++pos_;
        const mpq_class re = rational();
        skip_ws();
        if (peek() != '+' && peek() != '-') throw SyntaxError(pos_, "expected '+' or '-' in complex scalar");
        const bool minus = peek() == '-';
        ++pos_;
        const mpq_class im = rational();
        expect('i');
        expect(')');
        return Scalar::gaussian(re, minus ? mpq_class(-im) : im);
    }

    GroupElement exponent() {
        expect('t');
        expect('^');
        expect('(');
        const std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) throw SyntaxError(pos_, "unclosed exponent");
        GroupElement e;
        try {
            e = parse_element(text_.substr(pos_, close - pos_));
        } catch (const SyntaxError& err) {
            throw SyntaxError(pos_ + err.position(), "bad exponent element");
        }
        pos_ = close + 1;
        return e;
    }

    Series::Term term() {
        skip_ws();
        if (peek() == 't') return {exponent(), Scalar::rational(1)};
        Scalar c = scalar();
        skip_ws();
        if (peek() != '*') return {GroupElement(), c};
        ++pos_;
        return {exponent(), c};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Series parse_series(std::string_view text) { return SeriesParser(text).parse(); }

}  // namespace hahn
