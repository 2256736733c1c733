#ifndef DRG_AFFINE_HPP
#define DRG_AFFINE_HPP

#include <map>
#include <string>
#include <vector>

#include "drg/rat.hpp"

namespace drg {

// Affine expression c0 + sum of coeff * variable; zero coefficients are
// never stored.
class AffineForm {
  public:
    AffineForm() : constant_(0) {}
    explicit AffineForm(const Rat& c) : constant_(c) {}
    static AffineForm variable(const std::string& name, const Rat& coeff = Rat(1));

    const Rat& constant() const { return constant_; }
    const std::map<std::string, Rat>& terms() const { return terms_; }

    bool is_constant() const { return terms_.empty(); }
    Rat coeff(const std::string& name) const;
    void add_term(const std::string& name, const Rat& coeff);

    Rat evaluate(const std::map<std::string, Rat>& values) const;

    AffineForm& operator+=(const AffineForm& o);
    AffineForm& operator-=(const AffineForm& o);
    AffineForm& operator*=(const Rat& c);

    bool operator==(const AffineForm& o) const {
        return constant_ == o.constant_ && terms_ == o.terms_;
    }

    std::string str() const;

  private:
    Rat constant_;
    std::map<std::string, Rat> terms_;
};

AffineForm operator+(AffineForm a, const AffineForm& b);
AffineForm operator-(AffineForm a, const AffineForm& b);
AffineForm operator*(const Rat& c, AffineForm a);

// Parametric solution of a rational linear system: each unknown is an
// affine form over the named free variables.
struct ParamSolution {
    std::vector<AffineForm> assignments;  // one per unknown, in column order
    std::vector<std::string> free_vars;
};

}  // namespace drg

#endif
