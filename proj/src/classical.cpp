#include "drg/classical.hpp"

#include "drg/poly.hpp"

namespace drg {

namespace {

Rat bracket(const Int& b, int i) {
    if (b == 1) return Rat(i);
    Int bi = 1;
    for (int t = 0; t < i; ++t) bi *= b;
    return make_rat(bi - 1, b - 1);
}

}  // namespace

std::vector<ClassicalParams> is_classical(const IntersectionArray& ia) {
    std::vector<ClassicalParams> out;
    int d = ia.d();
    if (d < 3) return out;
    // Eliminating alpha and beta from the c_2 and c_3 equations leaves
    // (b^2 + b + 1)(c_2 - b) - c_3 = 0; candidate b are its integer roots.
    Rat c2(ia.c(2)), c3(ia.c(3));
    PolyQ elim({c2 - c3, c2 - 1, c2 - 1, Rat(-1)});
    for (const Rat& root : rational_roots(elim)) {
        if (!is_integer(root)) continue;
        Int b = to_int(root);
        if (b == 0 || b == -1) continue;
        Rat bd = bracket(b, d);
        if (bd == 0) continue;
        Rat alpha = c2 / (Rat(b) + 1) - 1;
        Rat beta = Rat(ia.b(0)) / bd;
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            if (Rat(ia.b(i)) != (bd - bracket(b, i)) * (beta - alpha * bracket(b, i)))
                ok = false;
        for (int i = 1; i <= d && ok; ++i)
            if (Rat(ia.c(i)) != bracket(b, i) * (Rat(1) + alpha * bracket(b, i - 1)))
                ok = false;
        if (ok) out.push_back({d, b, alpha, beta});
    }
    return out;
}

std::optional<GenPolyParams> gen_poly_params(const IntersectionArray& ia) {
    int d = ia.d();
    if (d < 2) return std::nullopt;
    for (int i = 1; i < d; ++i)
        if (ia.c(i) != 1) return std::nullopt;
    for (int i = 2; i < d; ++i)
        if (ia.b(i) != ia.b(1)) return std::nullopt;
    if (ia.c(d) > 1) {
        // even gon: c_d = t + 1
        Int t = ia.c(d) - 1;
        if (ia.b(0) % (t + 1) != 0) return std::nullopt;
        Int s = ia.b(0) / (t + 1);
        if (ia.b(1) != s * t) return std::nullopt;
        return GenPolyParams{2 * d, s, t};
    }
    // odd gon: requires s = t
    Int s = ia.b(0) - ia.b(1);
    if (s < 1 || ia.b(1) != s * s || ia.b(0) != s * (s + 1))
        return std::nullopt;
    return GenPolyParams{2 * d + 1, s, s};
}

}  // namespace drg
