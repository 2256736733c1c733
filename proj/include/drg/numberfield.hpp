#ifndef DRG_NUMBERFIELD_HPP
#define DRG_NUMBERFIELD_HPP

#include <memory>
#include <vector>

#include "drg/algebraic.hpp"

namespace drg {

// A real number field Q(g), where g is a designated root of a monic
// irreducible polynomial.
class NumberField {
  public:
    NumberField(PolyQ minpoly, AlgebraicNumber generator);

    const PolyQ& minpoly() const { return minpoly_; }
    const AlgebraicNumber& generator() const { return gen_; }
    int degree() const { return minpoly_.degree(); }

  private:
    PolyQ minpoly_;
    AlgebraicNumber gen_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field, as a polynomial in the generator of degree
// < deg(field). A null field means the rational field; coords then has
// length 1.
class NFElem {
  public:
    NFElem() : NFElem(Rat(0)) {}
    explicit NFElem(const Rat& r) : coords_{r} {}
    NFElem(FieldPtr field, std::vector<Rat> coords);

    static NFElem generator(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integer() const;
    Rat to_rat() const;

    NFElem operator-() const;
    // Exact sign, by refining the generator's isolating interval.
    int sign() const;

    bool operator==(const NFElem& o) const;

    std::string str() const;

  private:
    FieldPtr field_;          // null for Q
    std::vector<Rat> coords_;  // length deg(field), or 1 for Q

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
};

NFElem operator*(const Rat& c, const NFElem& a);

}  // namespace drg

#endif
