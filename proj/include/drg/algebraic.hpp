#ifndef DRG_ALGEBRAIC_HPP
#define DRG_ALGEBRAIC_HPP

#include <vector>

#include "drg/poly.hpp"

namespace drg {

// Exact real algebraic number: monic irreducible minimal polynomial plus
// an isolating interval [lo, hi] containing exactly one of its real roots.
// Rational numbers carry a degree-1 minimal polynomial and lo == hi.
class AlgebraicNumber {
  public:
    AlgebraicNumber() : AlgebraicNumber(Rat(0)) {}
    explicit AlgebraicNumber(const Rat& r);
    AlgebraicNumber(PolyQ minpoly, Rat lo, Rat hi);

    const PolyQ& minpoly() const { return minpoly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    int degree() const { return minpoly_.degree(); }

    bool is_rational() const { return minpoly_.degree() == 1; }
    Rat to_rat() const;

    // Halves the isolating interval.
    void refine() const;
    void refine_below(const Rat& width) const;

    double approx() const;

    // Exact comparison by interval refinement.
    int compare(const AlgebraicNumber& o) const;
    bool operator==(const AlgebraicNumber& o) const { return compare(o) == 0; }
    bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }
    bool operator>(const AlgebraicNumber& o) const { return compare(o) > 0; }

    std::string str() const;

  private:
    PolyQ minpoly_;
    mutable Rat lo_, hi_;
};

// Distinct real roots of a nonzero polynomial, sorted strictly descending,
// with pairwise disjoint isolating intervals.
std::vector<AlgebraicNumber> isolate_roots(const PolyQ& p);

}  // namespace drg

#endif
