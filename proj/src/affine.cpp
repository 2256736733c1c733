#include "drg/affine.hpp"

#include <sstream>

namespace drg {

AffineForm AffineForm::variable(const std::string& name, const Rat& coeff) {
    AffineForm f;
    f.add_term(name, coeff);
    return f;
}

Rat AffineForm::coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rat(0) : it->second;
}

void AffineForm::add_term(const std::string& name, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(name, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat AffineForm::evaluate(const std::map<std::string, Rat>& values) const {
    Rat v = constant_;
    for (const auto& [name, c] : terms_) {
        auto it = values.find(name);
        if (it == values.end())
            throw std::invalid_argument("no value for variable " + name);
        v += c * it->second;
    }
    return v;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    constant_ += o.constant_;
    for (const auto& [name, c] : o.terms_) add_term(name, c);
    return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
    constant_ -= o.constant_;
    for (const auto& [name, c] : o.terms_) add_term(name, -c);
    return *this;
}

AffineForm& AffineForm::operator*=(const Rat& c) {
    if (c == 0) {
        constant_ = 0;
        terms_.clear();
        return *this;
    }
    constant_ *= c;
    for (auto& [name, x] : terms_) x *= c;
    return *this;
}

AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
AffineForm operator*(const Rat& c, AffineForm a) { return a *= c; }

std::string AffineForm::str() const {
    if (is_constant()) return rat_str(constant_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << rat_str(a) << "*";
        os << name;
    }
    if (constant_ != 0)
        os << (constant_ < 0 ? " - " : " + ") << rat_str(abs(constant_));
    return os.str();
}

}  // namespace drg
