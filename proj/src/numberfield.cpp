#include "drg/numberfield.hpp"

#include <sstream>

namespace drg {

NumberField::NumberField(PolyQ minpoly, AlgebraicNumber generator)
    : minpoly_(std::move(minpoly)), gen_(std::move(generator)) {
    if (minpoly_.degree() < 2)
        throw std::invalid_argument("number field needs degree >= 2");
    if (!(minpoly_ == gen_.minpoly()))
        throw std::invalid_argument("generator is not a root of the field polynomial");
}

NFElem::NFElem(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    size_t want = field_ ? static_cast<size_t>(field_->degree()) : 1;
    coords_.resize(want, Rat(0));
}

NFElem NFElem::generator(const FieldPtr& field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return NFElem(field, std::move(c));
}

bool NFElem::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool NFElem::is_integer() const { return is_rational() && drg::is_integer(coords_[0]); }

Rat NFElem::to_rat() const {
    if (!is_rational())
        throw std::domain_error("to_rat on irrational field element: " + str());
    return coords_[0];
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (Rat& c : r.coords_) c = -c;
    return r;
}

namespace {

void align(const NFElem& a, const NFElem& b, FieldPtr& field,
           std::vector<Rat>& ca, std::vector<Rat>& cb) {
    if (a.field() && b.field() && a.field() != b.field() &&
        !(a.field()->minpoly() == b.field()->minpoly() &&
          a.field()->generator() == b.field()->generator()))
        throw std::domain_error("number field mismatch");
    field = a.field() ? a.field() : b.field();
    size_t n = field ? static_cast<size_t>(field->degree()) : 1;
    ca.assign(n, Rat(0));
    cb.assign(n, Rat(0));
    for (size_t i = 0; i < a.coords().size(); ++i) ca[i] = a.coords()[i];
    for (size_t i = 0; i < b.coords().size(); ++i) cb[i] = b.coords()[i];
}

// reduce a polynomial modulo the field polynomial, returning coords
std::vector<Rat> reduce(const PolyQ& p, const FieldPtr& field) {
    size_t n = field ? static_cast<size_t>(field->degree()) : 1;
    PolyQ r = field ? divmod(p, field->minpoly()).rem : p;
    std::vector<Rat> c(n, Rat(0));
    for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
    return c;
}

}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) {
    FieldPtr f;
    std::vector<Rat> ca, cb;
    align(a, b, f, ca, cb);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return NFElem(f, std::move(ca));
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    FieldPtr f;
    std::vector<Rat> ca, cb;
    align(a, b, f, ca, cb);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
    return NFElem(f, std::move(ca));
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    FieldPtr f;
    std::vector<Rat> ca, cb;
    align(a, b, f, ca, cb);
    PolyQ prod = PolyQ(std::move(ca)) * PolyQ(std::move(cb));
    return NFElem(f, reduce(prod, f));
}

NFElem operator/(const NFElem& a, const NFElem& b) {
    if (b.is_zero()) throw std::domain_error("division by zero field element");
    if (b.is_rational()) return (Rat(1) / b.coords()[0]) * a;
    // invert b modulo the field polynomial via extended Euclid
    FieldPtr f = b.field();
    PolyQ r0 = f->minpoly(), r1 = PolyQ(b.coords());
    PolyQ t0, t1 = PolyQ::constant(Rat(1));
    while (!r1.is_zero()) {
        PolyDivMod qr = divmod(r0, r1);
        PolyQ t2 = t0 - qr.quot * t1;
        r0 = r1;
        r1 = qr.rem;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd is a nonzero constant (minpoly irreducible)
    NFElem inv(f, reduce((Rat(1) / r0.coeff(0)) * t0, f));
    return a * inv;
}

NFElem operator*(const Rat& c, const NFElem& a) {
    NFElem r = a;
    std::vector<Rat> co = r.coords();
    for (Rat& x : co) x *= c;
    return NFElem(r.field(), std::move(co));
}

int NFElem::sign() const {
    if (is_rational()) return sgn(coords_[0]);
    const AlgebraicNumber& g = field_->generator();
    while (true) {
        // interval Horner evaluation at [g.lo, g.hi]
        Rat lo(0), hi(0);
        for (size_t i = coords_.size(); i-- > 0;) {
            Rat cands[4] = {lo * g.lo(), lo * g.hi(), hi * g.lo(), hi * g.hi()};
            Rat nlo = cands[0], nhi = cands[0];
            for (const Rat& c : cands) {
                if (c < nlo) nlo = c;
                if (c > nhi) nhi = c;
            }
            lo = nlo + coords_[i];
            hi = nhi + coords_[i];
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        g.refine();
    }
}

bool NFElem::operator==(const NFElem& o) const {
    if (!field_ && !o.field_) return coords_[0] == o.coords_[0];
    return (*this - o).is_zero();
}

std::string NFElem::str() const {
    if (is_rational()) return rat_str(coords_[0]);
    PolyQ p(coords_);
    return p.str("g");
}

}  // namespace drg
