#include "hahn/coeff.hpp"

#include <string>

#include "hahn/error.hpp"

namespace hahn {

namespace {

void require_same_tag(const Coeff& a, const Coeff& b) {
    if (a.tag() != b.tag()) {
        throw Error(ErrorKind::TagMismatch, "coefficients from different localizations: " +
                                                a.str() + " (" + std::string(to_string(a.tag())) +
                                                ") vs " + b.str() + " (" +
                                                std::string(to_string(b.tag())) + ")");
    }
}

bool den_allowed(const mpz_class& den, LocalTag tag) {
    const unsigned long p = tag == LocalTag::x2 ? 2 : 3;
    return mpz_divisible_ui_p(den.get_mpz_t(), p) == 0;
}

}  // namespace

std::string_view to_string(LocalTag tag) { return tag == LocalTag::x2 ? "X2" : "Y3"; }

Coeff Coeff::make(const mpz_class& num, const mpz_class& den, LocalTag tag) {
    if (den == 0) throw Error(ErrorKind::ZeroDivision, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    if (!den_allowed(q.get_den(), tag)) {
        throw Error(ErrorKind::DenominatorNotInLocalization,
                    q.get_str() + " is not in " + std::string(to_string(tag)));
    }
    return Coeff(q.get_num(), q.get_den(), tag);
}

Coeff Coeff::operator-() const { return Coeff(-num_, den_, tag_); }

Coeff operator+(const Coeff& a, const Coeff& b) {
    require_same_tag(a, b);
    mpq_class s = a.value() + b.value();
    return Coeff(s.get_num(), s.get_den(), a.tag());
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff Coeff::scaled(const mpz_class& k) const {
    mpq_class s = value() * k;
    return Coeff(s.get_num(), s.get_den(), tag_);
}

std::strong_ordering operator<=>(const Coeff& a, const Coeff& b) {
    require_same_tag(a, b);
    const int c = cmp(a.value(), b.value());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool Coeff::divisible_by(Divisor r) const {
    if (is_zero()) return true;
    // The prime other than the localizing one is a unit.
    const unsigned long p = tag_ == LocalTag::x2 ? 2 : 3;
    const int rv = to_int(r);
    if (rv % static_cast<int>(p) != 0) return true;
    return mpz_divisible_ui_p(num_.get_mpz_t(), p) != 0;
}

std::string Coeff::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Coeff coeff_coset_witness(const Coeff& a, Divisor r, const Coeff& hi) {
    if (a.tag() != hi.tag()) {
        throw Error(ErrorKind::TagMismatch, "coset witness bound in a different localization");
    }
    if (hi.sign() <= 0) throw Error(ErrorKind::Precondition, "coset witness needs hi > 0");
    if (a.divisible_by(r)) {
        throw Error(ErrorKind::DivisibleElement,
                    a.str() + " is divisible by " + std::to_string(to_int(r)));
    }
    if (a.sign() > 0 && a < hi) return a;

    // base^k is a unit of the localization, so r/base^k stays in r·L.
    const long base = a.tag() == LocalTag::x2 ? 3 : 2;
    mpq_class step(to_int(r));
    const mpq_class bound = hi.value();
    while (step >= bound) step /= base;

    const mpq_class quotient = a.value() / step;
    mpz_class floor_q;
    mpz_fdiv_q(floor_q.get_mpz_t(), quotient.get_num_mpz_t(), quotient.get_den_mpz_t());
    const mpq_class c = a.value() - floor_q * step;
    return Coeff::make(c.get_num(), c.get_den(), a.tag());
}

Coeff parse_coeff(std::string_view text, LocalTag tag) {
    auto fail = [&](std::size_t pos, const std::string& msg) -> Coeff {
        throw SyntaxError(pos, msg + " in coefficient '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto read_int = [&](bool allow_sign) -> mpz_class {
        skip_ws();
        std::string digits;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
            if (text[i] == '-') digits.push_back('-');
            ++i;
            skip_ws();
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') digits.push_back(text[i++]);
        if (i == start) fail(i, "expected digits");
        return mpz_class(digits);
    };
    const mpz_class num = read_int(true);
    mpz_class den = 1;
    skip_ws();
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_int(false);
    }
    skip_ws();
    if (i != text.size()) fail(i, "trailing characters");
    return Coeff::make(num, den, tag);
}

}  // namespace hahn
