#include "drg/algebraic.hpp"

#include <sstream>

namespace drg {

AlgebraicNumber::AlgebraicNumber(const Rat& r)
    : minpoly_(PolyQ::linear_root(r)), lo_(r), hi_(r) {}

AlgebraicNumber::AlgebraicNumber(PolyQ minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (minpoly_.degree() < 1)
        throw std::invalid_argument("minimal polynomial must be nonconstant");
    if (minpoly_.degree() == 1) {
        // normalize rationals to a point interval
        lo_ = hi_ = -minpoly_.coeff(0) / minpoly_.coeff(1);
    }
}

Rat AlgebraicNumber::to_rat() const {
    if (!is_rational())
        throw std::domain_error("to_rat on irrational algebraic number");
    return lo_;
}

void AlgebraicNumber::refine() const {
    if (lo_ == hi_) return;
    Rat mid = (lo_ + hi_) / 2;
    int sm = minpoly_.sign_at(mid);
    if (sm == 0) {
        lo_ = hi_ = mid;
        return;
    }
    // the root is where the sign differs from the endpoint signs
    int shi = minpoly_.sign_at(hi_);
    if (shi == 0 || sm != shi)
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicNumber::refine_below(const Rat& width) const {
    while (hi_ - lo_ > width) refine();
}

double AlgebraicNumber::approx() const {
    refine_below(make_rat(1, 1000000000));
    return Rat((lo_ + hi_) / 2).get_d();
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const {
    if (is_rational() && o.is_rational()) return sgn(lo_ - o.lo_);
    while (true) {
        if (hi_ < o.lo_) return -1;
        if (o.hi_ < lo_) return 1;
        // overlapping intervals: equal iff same minimal polynomial and the
        // union of the intervals still contains a single root
        if (minpoly_ == o.minpoly_) {
            SturmSequence st(minpoly_);
            if (st.count_roots(std::min(lo_, o.lo_), std::max(hi_, o.hi_)) == 1)
                return 0;
        }
        refine();
        o.refine();
    }
}

std::string AlgebraicNumber::str() const {
    if (is_rational()) return rat_str(lo_);
    std::ostringstream os;
    os << "root of " << minpoly_.str() << " in (" << rat_str(lo_) << ", "
       << rat_str(hi_) << ")";
    return os.str();
}

std::vector<AlgebraicNumber> isolate_roots(const PolyQ& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots of zero");
    std::vector<AlgebraicNumber> roots;
    PolyQ sf = squarefree_part(p);
    if (sf.degree() == 0) return roots;
    for (const PolyQ& f : factor_squarefree(sf)) {
        if (f.degree() == 1) {
            roots.emplace_back(-f.coeff(0) / f.coeff(1));
            continue;
        }
        SturmSequence st(f);
        Rat bound = st.root_bound();
        // bisect [-bound, bound] until each interval isolates one root
        std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int cnt = st.count_roots(a, b);
            if (cnt == 0) continue;
            if (cnt == 1) {
                roots.emplace_back(f, a, b);
                continue;
            }
            Rat mid = (a + b) / 2;
            if (f.sign_at(mid) == 0) {
                // irreducible of degree >= 2 has no rational roots
                throw std::logic_error("unexpected rational root");
            }
            stack.push_back({a, mid});
            stack.push_back({mid, b});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
                  return a.compare(b) > 0;
              });
    // refine until isolating intervals are pairwise disjoint
    for (size_t i = 0; i + 1 < roots.size(); ++i)
        while (!(roots[i + 1].hi() < roots[i].lo())) {
            roots[i].refine();
            roots[i + 1].refine();
        }
    return roots;
}

}  // namespace drg
