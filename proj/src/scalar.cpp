#include "hahn/scalar.hpp"

#include "hahn/error.hpp"

namespace hahn {

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) {
        throw Error(ErrorKind::TagMismatch, "scalars from different residue fields: " + a.str() +
                                                " vs " + b.str());
    }
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string_view to_string(ResidueField field) { return field == ResidueField::q ? "Q" : "QI"; }

Scalar Scalar::rational(const mpq_class& value) {
    mpq_class v = value;
    v.canonicalize();
    return Scalar(v, 0, ResidueField::q);
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
    mpq_class r = re;
    mpq_class i = im;
    r.canonicalize();
    i.canonicalize();
    return Scalar(r, i, ResidueField::qi);
}

Scalar Scalar::operator-() const { return Scalar(-re_, -im_, field_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.re_ + b.re_, a.im_ + b.im_, a.field_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_, a.field_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDivision, "inverse of zero scalar");
    const mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm, field_);
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
}

std::string Scalar::str() const {
    if (field_ == ResidueField::q) return rational_str(re_);
    std::string s = "(" + rational_str(re_);
    s += im_ < 0 ? "-" : "+";
    s += rational_str(abs(im_)) + " i)";
    return s;
}

}  // namespace hahn
