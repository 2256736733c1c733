#include "drg/spectrum.hpp"

namespace drg {

PolyQ char_poly(const IntersectionArray& ia) {
    int d = ia.d();
    // det(xI - B_1) for the tridiagonal B_1, by principal minors
    PolyQ prev2 = PolyQ::constant(Rat(1));
    PolyQ prev1 = PolyQ::linear_root(Rat(ia.a(0)));
    for (int i = 1; i <= d; ++i) {
        PolyQ f = PolyQ::linear_root(Rat(ia.a(i))) * prev1 -
                  Rat(ia.b(i - 1) * ia.c(i)) * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(f);
    }
    return prev1;
}

namespace {

std::vector<int> identity_perm(int m) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    return p;
}

std::vector<int> check_perm(const std::vector<int>& perm, int m) {
    if (perm.empty()) return identity_perm(m);
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("eigenvalue permutation has wrong length");
    std::vector<bool> seen(m, false);
    for (int p : perm) {
        if (p < 0 || p >= m || seen[p])
            throw std::invalid_argument("invalid eigenvalue permutation");
        seen[p] = true;
    }
    return perm;
}

}  // namespace

Spectrum spectrum_raw(const IntersectionArray& ia) {
    int d = ia.d();
    Spectrum sp;
    sp.eigenvalues = isolate_roots(char_poly(ia));
    if (static_cast<int>(sp.eigenvalues.size()) != d + 1)
        throw UnsupportedError("intersection matrix has a repeated eigenvalue");

    // embed all eigenvalues in one shared field
    const PolyQ* irr = nullptr;
    for (const auto& ev : sp.eigenvalues) {
        if (ev.is_rational()) continue;
        if (ev.degree() > 2)
            throw UnsupportedError(
                "eigenvalue of algebraic degree > 2 is not supported");
        if (irr && !(*irr == ev.minpoly()))
            throw UnsupportedError(
                "eigenvalues from two distinct irrational fields are not supported");
        irr = &ev.minpoly();
    }
    if (irr) {
        const AlgebraicNumber* gen = nullptr;
        for (const auto& ev : sp.eigenvalues)
            if (!ev.is_rational()) {
                gen = &ev;
                break;
            }
        sp.field = std::make_shared<const NumberField>(*irr, *gen);
    }
    for (const auto& ev : sp.eigenvalues) {
        if (ev.is_rational()) {
            sp.thetas.emplace_back(ev.to_rat());
        } else if (ev == sp.field->generator()) {
            sp.thetas.push_back(NFElem::generator(sp.field));
        } else {
            // the conjugate root of x^2 + p1 x + p0: -p1 - g
            sp.thetas.push_back(NFElem(sp.field, {-irr->coeff(1), Rat(-1)}) );
        }
    }

    // cosine sequences
    NFElem one(Rat(1));
    for (int i = 0; i <= d; ++i) {
        const NFElem& th = sp.thetas[i];
        std::vector<NFElem> u{one, Rat(1) / Rat(ia.k()) * th};
        for (int j = 1; j < d; ++j) {
            NFElem next = Rat(1) / Rat(ia.b(j)) *
                          ((th - NFElem(Rat(ia.a(j)))) * u[j] -
                           Rat(ia.c(j)) * u[j - 1]);
            u.push_back(std::move(next));
        }
        sp.cosines.push_back(std::move(u));
    }

    // multiplicities m_i = n / sum_j k_j u_j(theta_i)^2
    for (int i = 0; i <= d; ++i) {
        NFElem s(Rat(0));
        for (int j = 0; j <= d; ++j)
            s = s + Rat(ia.kk(j)) * (sp.cosines[i][j] * sp.cosines[i][j]);
        if (!s.is_rational())
            throw InfeasibleError("multiplicity of eigenvalue " +
                                  std::to_string(i) + " is irrational");
        Rat m = Rat(ia.n()) / s.to_rat();
        if (m <= 0)
            throw InfeasibleError("multiplicity of eigenvalue " +
                                  std::to_string(i) + " is not positive");
        sp.mults.push_back(m);
    }
    return sp;
}

Spectrum spectrum(const IntersectionArray& ia) {
    Spectrum sp = spectrum_raw(ia);
    Rat total(0);
    for (size_t i = 0; i < sp.mults.size(); ++i) {
        if (!is_integer(sp.mults[i]))
            throw InfeasibleError("multiplicity of eigenvalue " +
                                      std::to_string(i) + " equals " +
                                      rat_str(sp.mults[i]) + ", not an integer",
                                  {"BCN"});
        total += sp.mults[i];
    }
    if (sp.mults[0] != 1)
        throw InfeasibleError("multiplicity of the valency eigenvalue is not 1");
    if (total != Rat(ia.n()))
        throw InfeasibleError("multiplicities do not sum to the order");
    return sp;
}

Eigenmatrices eigenmatrices(const IntersectionArray& ia, const Spectrum& sp,
                            const std::vector<int>& perm) {
    int d = ia.d();
    auto sigma = check_perm(perm, d + 1);
    Eigenmatrices em;
    em.P.assign(d + 1, std::vector<NFElem>(d + 1));
    em.Q.assign(d + 1, std::vector<NFElem>(d + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            em.P[i][j] = Rat(ia.kk(j)) * sp.cosines[sigma[i]][j];
            em.Q[i][j] = sp.mults[sigma[j]] * sp.cosines[sigma[j]][i];
        }
    return em;
}

bool is_formally_self_dual(const IntersectionArray& ia) {
    Spectrum sp = spectrum(ia);
    Eigenmatrices em = eigenmatrices(ia, sp);
    for (size_t i = 0; i < em.P.size(); ++i)
        for (size_t j = 0; j < em.P.size(); ++j)
            if (!(em.P[i][j] == em.Q[i][j])) return false;
    return true;
}

KreinTensor krein(const IntersectionArray& ia, const Spectrum& sp,
                  const std::vector<int>& perm) {
    int d = ia.d();
    auto sigma = check_perm(perm, d + 1);
    Rat n(ia.n());
    KreinTensor q(d + 1);
    for (int h = 0; h <= d; ++h)
        for (int i = 0; i <= d; ++i)
            for (int j = i; j <= d; ++j) {
                NFElem s(Rat(0));
                for (int l = 0; l <= d; ++l)
                    s = s + Rat(ia.kk(l)) *
                                (sp.cosines[sigma[i]][l] *
                                 (sp.cosines[sigma[j]][l] * sp.cosines[sigma[h]][l]));
                if (!s.is_rational())
                    throw UnsupportedError("irrational Krein parameter");
                Rat val = sp.mults[sigma[i]] * sp.mults[sigma[j]] / n * s.to_rat();
                if (val < 0)
                    throw InfeasibleError(
                        "negative Krein parameter q^" + std::to_string(h) + "_{" +
                            std::to_string(i) + "," + std::to_string(j) + "} = " +
                            rat_str(val),
                        {"BCN"});
                q(h, i, j) = val;
                q(h, j, i) = val;
            }
    return q;
}

}  // namespace drg
