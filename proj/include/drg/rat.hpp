#ifndef DRG_RAT_HPP
#define DRG_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace drg {

// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// Backed by GMP; mpq_class results of arithmetic are always canonical
// (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_int(const Rat& r) {
    if (!is_integer(r))
        throw std::domain_error("to_int: not an integer: " + r.get_str());
    return r.get_num();
}

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// Renders "n" for integers and "num/den" otherwise.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "n" or "num/den".
Rat parse_rat(const std::string& text);

// True if n is expressible as a sum of two integer squares.
bool is_sum_of_two_squares(const Int& n);

}  // namespace drg

#endif
