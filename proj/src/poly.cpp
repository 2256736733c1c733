#include "drg/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace drg {

namespace {
void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

PolyQ PolyQ::constant(const Rat& c) { return PolyQ({c}); }

PolyQ PolyQ::linear_root(const Rat& r) { return PolyQ({-r, Rat(1)}); }

const Rat& PolyQ::leading() const {
    if (is_zero()) throw std::domain_error("leading of zero polynomial");
    return coeffs_.back();
}

const Rat& PolyQ::coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

Rat PolyQ::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        v = v * x + *it;
    return v;
}

int PolyQ::sign_at(const Rat& x) const { return sgn(eval(x)); }

PolyQ PolyQ::derivative() const {
    std::vector<Rat> d;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(Rat(static_cast<long>(i)) * coeffs_[i]);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> c = coeffs_;
    Rat l = leading();
    for (auto& x : c) x /= l;
    return PolyQ(std::move(c));
}

std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << rat_str(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    return PolyQ(std::move(c));
}

PolyQ operator*(const Rat& c, const PolyQ& a) {
    std::vector<Rat> r = a.coeffs();
    for (auto& x : r) x *= c;
    return PolyQ(std::move(r));
}

PolyDivMod divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {PolyQ(), a};
    std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / b.leading();
        quot[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

bool divides(const PolyQ& b, const PolyQ& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return divmod(a, b).rem.is_zero();
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyQ squarefree_part(const PolyQ& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    PolyQ g = poly_gcd(p, p.derivative());
    return divmod(p, g).quot.monic();
}

namespace {

// Scales a rational polynomial to a primitive integer polynomial
// with positive leading coefficient.
std::vector<Int> to_primitive_int(const PolyQ& p) {
    Int lcm = 1;
    for (const Rat& c : p.coeffs())
        lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    std::vector<Int> z;
    Int content = 0;
    for (const Rat& c : p.coeffs()) {
        Rat s = c * Rat(lcm);
        z.push_back(s.get_num());
        content = gcd(content, z.back());
    }
    if (content > 1)
        for (auto& x : z) x /= content;
    if (!z.empty() && z.back() < 0)
        for (auto& x : z) x = -x;
    return z;
}

std::vector<Int> divisors_of(Int n, size_t cap) {
    n = abs(n);
    std::vector<Int> divs;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
            if (divs.size() > cap)
                throw std::runtime_error("factorization budget exceeded");
        }
    }
    return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const PolyQ& p) {
    std::vector<Rat> roots;
    if (p.is_zero()) return roots;
    std::vector<Int> z = to_primitive_int(p);
    // strip trailing zero coefficients (root 0)
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low + 1 >= z.size()) return roots;
    Int a0 = z[low], an = z.back();
    auto ps = divisors_of(a0, 100000);
    auto qs = divisors_of(an, 100000);
    for (const Int& pd : ps)
        for (const Int& qd : qs) {
            for (int s : {1, -1}) {
                Rat cand = make_rat(s * pd, qd);
                if (p.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Lagrange interpolation through integer points (xs[i], ys[i]).
PolyQ interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    PolyQ result;
    for (size_t i = 0; i < xs.size(); ++i) {
        PolyQ term = PolyQ::constant(Rat(ys[i]));
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            term = term * PolyQ::linear_root(Rat(xs[j]));
            term = make_rat(1, xs[i] - xs[j]) * term;
        }
        result = result + term;
    }
    return result;
}

// Kronecker search for an irreducible factor of degree <= max_deg of a
// squarefree primitive integer polynomial without rational roots.
// Returns a monic rational factor of degree in [2, max_deg], or the zero
// polynomial if none exists.
PolyQ kronecker_factor(const PolyQ& p, int max_deg, size_t budget) {
    for (int m = 2; m <= max_deg; ++m) {
        std::vector<Int> xs;
        for (Int x = 0; static_cast<int>(xs.size()) < m + 1;
             x = Int(x > 0 ? Int(-x) : Int(1 - x)))
            xs.push_back(x);
        std::vector<std::vector<Int>> divsets;
        size_t total = 1;
        for (const Int& x : xs) {
            Int v = to_int(p.eval(Rat(x)));
            auto d = divisors_of(v, budget);
            // include negative divisors
            size_t n = d.size();
            for (size_t i = 0; i < n; ++i) d.push_back(-d[i]);
            total *= d.size();
            if (total > budget)
                throw std::runtime_error("factorization budget exceeded");
            divsets.push_back(std::move(d));
        }
        std::vector<size_t> idx(xs.size(), 0);
        while (true) {
            std::vector<Int> ys;
            for (size_t i = 0; i < xs.size(); ++i) ys.push_back(divsets[i][idx[i]]);
            PolyQ cand = interpolate(xs, ys);
            if (cand.degree() == m && divides(cand, p)) return cand.monic();
            size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < divsets[i].size()) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }
    return PolyQ();
}

}  // namespace

std::vector<PolyQ> factor_squarefree(const PolyQ& p) {
    std::vector<PolyQ> factors;
    PolyQ rest = p.monic();
    if (rest.degree() <= 0) return factors;
    for (const Rat& r : rational_roots(rest)) {
        factors.push_back(PolyQ::linear_root(r));
        rest = divmod(rest, factors.back()).quot;
    }
    while (rest.degree() > 0) {
        if (rest.degree() <= 3) {
            // no rational roots left, so degree <= 3 is irreducible
            factors.push_back(rest.monic());
            break;
        }
        PolyQ f = kronecker_factor(rest, rest.degree() / 2, 2000000);
        if (f.is_zero()) {
            factors.push_back(rest.monic());
            break;
        }
        factors.push_back(f);
        rest = divmod(rest, f).quot;
    }
    std::sort(factors.begin(), factors.end(),
              [](const PolyQ& a, const PolyQ& b) { return a.degree() < b.degree(); });
    return factors;
}

SturmSequence::SturmSequence(const PolyQ& p) {
    seq_.push_back(p.monic());
    if (p.degree() > 0) {
        seq_.push_back(p.derivative().monic());
        while (seq_.back().degree() > 0) {
            PolyQ r = divmod(seq_[seq_.size() - 2], seq_.back()).rem;
            if (r.is_zero()) break;
            // negate and scale by a positive constant; signs are preserved
            r = Rat(-1) * r;
            seq_.push_back((Rat(1) / abs(r.leading())) * r);
        }
    }
}

int SturmSequence::sign_changes_at(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const PolyQ& q : seq_) {
        int s = q.sign_at(x);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int SturmSequence::count_roots(const Rat& a, const Rat& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

Rat SturmSequence::root_bound() const {
    const PolyQ& p = seq_.front();
    Rat bound(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat m = abs(p.coeff(i));
        if (m > bound) bound = m;
    }
    return bound + 1;
}

}  // namespace drg
