#include "drg/rat.hpp"

namespace drg {

Rat parse_rat(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("invalid rational literal: " + text);
    r.canonicalize();
    return r;
}

bool is_sum_of_two_squares(const Int& n) {
    if (n < 0) return false;
    for (Int a = 0; a * a * 2 <= n; ++a) {
        Int rem = n - a * a;
        if (mpz_perfect_square_p(rem.get_mpz_t())) return true;
    }
    return false;
}

}  // namespace drg
