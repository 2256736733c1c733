#ifndef DRG_POLY_HPP
#define DRG_POLY_HPP

#include <vector>

#include "drg/rat.hpp"

namespace drg {

// Univariate polynomial over the rationals, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector.
class PolyQ {
  public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs);
    static PolyQ constant(const Rat& c);
    // x - r
    static PolyQ linear_root(const Rat& r);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    const Rat& coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;

    PolyQ derivative() const;
    PolyQ monic() const;

    bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<Rat> coeffs_;
};

PolyQ operator+(const PolyQ& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const Rat& c, const PolyQ& a);

// Exact division with remainder; b nonzero.
struct PolyDivMod {
    PolyQ quot, rem;
};
PolyDivMod divmod(const PolyQ& a, const PolyQ& b);

// True if b divides a exactly.
bool divides(const PolyQ& b, const PolyQ& a);

// Monic gcd.
PolyQ poly_gcd(PolyQ a, PolyQ b);

// Product of distinct irreducible factors, monic.
PolyQ squarefree_part(const PolyQ& p);

// All rational roots of p (without multiplicity).
std::vector<Rat> rational_roots(const PolyQ& p);

// Factors a squarefree monic polynomial into monic irreducible factors.
// Throws std::runtime_error if the deterministic search budget is exceeded.
std::vector<PolyQ> factor_squarefree(const PolyQ& p);

// Sturm sequence of a squarefree polynomial.
class SturmSequence {
  public:
    explicit SturmSequence(const PolyQ& p);
    // Number of distinct real roots in the half-open interval (a, b].
    int count_roots(const Rat& a, const Rat& b) const;
    // Bound B such that all real roots lie in [-B, B].
    Rat root_bound() const;

  private:
    int sign_changes_at(const Rat& x) const;
    std::vector<PolyQ> seq_;
};

}  // namespace drg

#endif
