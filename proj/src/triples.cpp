#include "drg/triples.hpp"

#include <algorithm>
#include <optional>

#include "drg/errors.hpp"
#include "drg/linalg.hpp"
#include "drg/spectrum.hpp"

namespace drg {

namespace {

std::string pos_name(const Triple& t) {
    return std::to_string(t[0]) + "_" + std::to_string(t[1]) + "_" +
           std::to_string(t[2]);
}

// value of [i j h] when at least one index is zero
Rat boundary_value(const TripleScenario& sc, int i, int j, int h) {
    if (i == 0) return Rat((j == sc.W && h == sc.V) ? 1 : 0);
    if (j == 0) return Rat((i == sc.W && h == sc.U) ? 1 : 0);
    return Rat((i == sc.V && j == sc.U) ? 1 : 0);  // h == 0
}

void check_scenario(const TripleScenario& sc) {
    int d = sc.ia.d();
    if (sc.U < 0 || sc.U > d || sc.V < 0 || sc.V > d || sc.W < 0 || sc.W > d)
        throw std::invalid_argument("triple scenario distance out of range");
    if (sc.ia.p()(sc.W, sc.U, sc.V) == 0)
        throw std::domain_error(
            "inadmissible triple scenario: no vertex triple realizes the "
            "distances (" +
            std::to_string(sc.U) + ", " + std::to_string(sc.V) + ", " +
            std::to_string(sc.W) + ")");
}

AffineForm substitute(const AffineForm& f,
                      const std::map<std::string, Rat>& values) {
    AffineForm out(f.constant());
    for (const auto& [name, coeff] : f.terms()) {
        auto it = values.find(name);
        if (it == values.end())
            out.add_term(name, coeff);
        else
            out += AffineForm(coeff * it->second);
    }
    return out;
}

}  // namespace

std::set<Triple> zero_pattern(const TripleScenario& sc) {
    check_scenario(sc);
    int d = sc.ia.d();
    const auto& p = sc.ia.p();
    bool parity = sc.use_parity || sc.ia.is_bipartite();
    std::set<Triple> zeros;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int h = 1; h <= d; ++h) {
                bool z = p(sc.W, i, j) == 0 || p(sc.V, i, h) == 0 ||
                         p(sc.U, j, h) == 0;
                if (parity && (((i + j) | (j + h) | (h + i)) & 1)) z = true;
                if (z) zeros.insert({i, j, h});
            }
    for (const Triple& t : sc.extra_zeros) zeros.insert(t);
    return zeros;
}

std::set<Triple> krein_zero_list(const IntersectionArray& ia,
                                 const std::vector<int>& ordering) {
    Spectrum sp = spectrum_raw(ia);
    KreinTensor q = krein(ia, sp, ordering);
    std::set<Triple> out;
    int d = ia.d();
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int h = 1; h <= d; ++h)
                if (q(h, i, j) == 0) out.insert({i, j, h});
    return out;
}

ParametricTriples solve_triples(const TripleScenario& sc) {
    check_scenario(sc);
    int d = sc.ia.d();
    const auto& p = sc.ia.p();
    std::set<Triple> zeros = zero_pattern(sc);

    // unknowns in lexicographic order
    std::map<Triple, int> index;
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int h = 1; h <= d; ++h) {
                Triple t{i, j, h};
                if (zeros.count(t)) continue;
                index[t] = static_cast<int>(names.size());
                names.push_back(pos_name(t));
            }
    size_t nu = names.size();

    Matrix A;
    std::vector<Rat> rhs;
    auto add_sum_equation = [&](int fixed1, int fixed2, int slot) {
        // sum over the running index in `slot` of [i j h] with the other
        // two indices fixed
        std::vector<Rat> row(nu, Rat(0));
        for (int l = 1; l <= d; ++l) {
            Triple t;
            t[slot] = l;
            t[(slot + 1) % 3] = (slot == 0) ? fixed1 : (slot == 1 ? fixed2 : fixed1);
            t[(slot + 2) % 3] = (slot == 0) ? fixed2 : (slot == 1 ? fixed1 : fixed2);
            auto it = index.find(t);
            if (it != index.end()) row[it->second] += 1;
        }
        A.push_back(std::move(row));
    };
    for (int j = 1; j <= d; ++j)
        for (int h = 1; h <= d; ++h) {
            add_sum_equation(j, h, 0);
            rhs.push_back(Rat(p(sc.U, j, h)) - boundary_value(sc, 0, j, h));
        }
    for (int i = 1; i <= d; ++i)
        for (int h = 1; h <= d; ++h) {
            add_sum_equation(i, h, 1);
            rhs.push_back(Rat(p(sc.V, i, h)) - boundary_value(sc, i, 0, h));
        }
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            add_sum_equation(i, j, 2);
            rhs.push_back(Rat(p(sc.W, i, j)) - boundary_value(sc, i, j, 0));
        }

    // Krein-zero equations: sum_{r,s,t} Q_ri Q_sj Q_th [r s t] = 0
    Spectrum sp = spectrum_raw(sc.ia);
    Eigenmatrices em = eigenmatrices(sc.ia, sp);
    size_t width = sp.field ? static_cast<size_t>(sp.field->degree()) : 1;
    auto coord = [&](const NFElem& e, size_t c) {
        return c < e.coords().size() ? e.coords()[c] : Rat(0);
    };
    for (const Triple& z : krein_zero_list(sc.ia)) {
        int i = z[0], j = z[1], h = z[2];
        std::vector<NFElem> coef(nu, NFElem(Rat(0)));
        NFElem right(Rat(0));
        for (int r = 0; r <= d; ++r)
            for (int s = 0; s <= d; ++s)
                for (int t = 0; t <= d; ++t) {
                    NFElem c = em.Q[r][i] * em.Q[s][j] * em.Q[t][h];
                    if (r >= 1 && s >= 1 && t >= 1) {
                        auto it = index.find({r, s, t});
                        if (it != index.end())
                            coef[it->second] = coef[it->second] + c;
                    } else {
                        Rat bv = boundary_value(sc, r, s, t);
                        if (bv != 0) right = right - bv * c;
                    }
                }
        for (size_t c = 0; c < width; ++c) {
            std::vector<Rat> row(nu);
            bool nonzero = false;
            for (size_t u = 0; u < nu; ++u) {
                row[u] = coord(coef[u], c);
                if (row[u] != 0) nonzero = true;
            }
            Rat rv = coord(right, c);
            if (!nonzero && rv == 0) continue;
            A.push_back(std::move(row));
            rhs.push_back(rv);
        }
    }

    // pins
    for (const auto& [t, value] : sc.pins) {
        if (t[0] < 1 || t[0] > d || t[1] < 1 || t[1] > d || t[2] < 1 ||
            t[2] > d)
            throw std::invalid_argument("pinned position out of range");
        std::vector<Rat> row(nu, Rat(0));
        auto it = index.find(t);
        if (it != index.end()) row[it->second] = 1;
        A.push_back(std::move(row));
        rhs.push_back(value);
    }

    auto sol = solve_affine(A, rhs, names);
    if (!sol)
        throw InfeasibleError(
            "triple-intersection system for distances (" +
            std::to_string(sc.U) + ", " + std::to_string(sc.V) + ", " +
            std::to_string(sc.W) + ") is inconsistent");

    ParametricTriples pt{sc, Array3D<AffineForm>(d + 1), sol->free_vars};
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            for (int h = 0; h <= d; ++h) {
                if (i == 0 || j == 0 || h == 0) {
                    pt.entries(i, j, h) =
                        AffineForm(boundary_value(sc, i, j, h));
                    continue;
                }
                auto it = index.find({i, j, h});
                pt.entries(i, j, h) = (it == index.end())
                                          ? AffineForm(Rat(0))
                                          : sol->assignments[it->second];
            }
    if (!sc.params.empty()) return reparametrize(pt, sc.params);
    return pt;
}

ParametricTriples reparametrize(const ParametricTriples& pt,
                                const std::map<std::string, Triple>& params) {
    // equations: entry(pos) = <new name>, solved for the old free vars
    std::vector<std::pair<std::string, AffineForm>> eqs;
    for (const auto& [name, t] : params) {
        AffineForm f = pt.entries(t[0], t[1], t[2]);
        // f (over old vars) = name  <=>  f - name = 0
        f -= AffineForm::variable(name);
        eqs.emplace_back(name, std::move(f));
    }
    // eliminate old free variables by Gaussian substitution
    std::map<std::string, AffineForm> subst_map;  // old var -> form
    for (auto& [name, eq] : eqs) {
        AffineForm cur = eq;
        // apply pending substitutions
        for (const auto& [v, g] : subst_map) {
            Rat c = cur.coeff(v);
            if (c != 0) {
                cur -= c * AffineForm::variable(v);
                cur += c * g;
            }
        }
        // pick an old free variable to eliminate
        std::string pivot;
        for (const std::string& v : pt.free_vars)
            if (cur.coeff(v) != 0 && !subst_map.count(v)) {
                pivot = v;
                break;
            }
        if (pivot.empty())
            throw std::invalid_argument(
                "parameter " + name +
                " is not independent of the previous parameters");
        Rat c = cur.coeff(pivot);
        AffineForm g = cur;
        g -= c * AffineForm::variable(pivot);
        g *= Rat(-1) / c;  // pivot = -(cur - c*pivot)/c
        // fold into existing substitutions
        for (auto& [v, old] : subst_map) {
            Rat cc = old.coeff(pivot);
            if (cc != 0) {
                old -= cc * AffineForm::variable(pivot);
                old += cc * g;
            }
        }
        subst_map.emplace(pivot, std::move(g));
    }
    ParametricTriples out = pt;
    out.free_vars.clear();
    for (const std::string& v : pt.free_vars)
        if (!subst_map.count(v)) out.free_vars.push_back(v);
    for (const auto& [name, t] : params) out.free_vars.push_back(name);
    std::sort(out.free_vars.begin(), out.free_vars.end());
    size_t dim = pt.entries.dim();
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t h = 0; h < dim; ++h) {
                AffineForm f = pt.entries(i, j, h);
                for (const auto& [v, g] : subst_map) {
                    Rat c = f.coeff(v);
                    if (c != 0) {
                        f -= c * AffineForm::variable(v);
                        f += c * g;
                    }
                }
                out.entries(i, j, h) = std::move(f);
            }
    return out;
}

namespace {

struct Box {
    std::optional<Rat> lo, hi;
};

// bound tightening for the free variables from 0 <= f <= ub
bool propagate(const std::vector<std::pair<AffineForm, Rat>>& constraints,
               std::map<std::string, Box>& vars, std::string* fail) {
    for (int pass = 0; pass < 64; ++pass) {
        bool changed = false;
        for (const auto& [f, ub] : constraints) {
            if (f.terms().empty()) {
                if (f.constant() < 0 || f.constant() > ub) {
                    if (fail)
                        *fail = "entry equals " + rat_str(f.constant()) +
                                ", outside [0, " + rat_str(ub) + "]";
                    return false;
                }
                continue;
            }
            for (const auto& [v, a] : f.terms()) {
                // residual interval of f - a*v
                Rat rlo = f.constant(), rhi = f.constant();
                bool lo_ok = true, hi_ok = true;
                for (const auto& [w, b] : f.terms()) {
                    if (w == v) continue;
                    const Box& bx = vars[w];
                    const std::optional<Rat>&lo_b = (b > 0 ? bx.lo : bx.hi),
                          &hi_b = (b > 0 ? bx.hi : bx.lo);
                    if (lo_b)
                        rlo += b * *lo_b;
                    else
                        lo_ok = false;
                    if (hi_b)
                        rhi += b * *hi_b;
                    else
                        hi_ok = false;
                }
                // 0 <= a*v + res <= ub
                Box& bx = vars[v];
                if (a > 0) {
                    if (hi_ok) {
                        Rat lo = (Rat(0) - rhi) / a;
                        if (!bx.lo || lo > *bx.lo) bx.lo = lo, changed = true;
                    }
                    if (lo_ok) {
                        Rat hi = (ub - rlo) / a;
                        if (!bx.hi || hi < *bx.hi) bx.hi = hi, changed = true;
                    }
                } else {
                    if (hi_ok) {
                        Rat hi = (Rat(0) - rhi) / a;
                        if (!bx.hi || hi < *bx.hi) bx.hi = hi, changed = true;
                    }
                    if (lo_ok) {
                        Rat lo = (ub - rlo) / a;
                        if (!bx.lo || lo > *bx.lo) bx.lo = lo, changed = true;
                    }
                }
                if (bx.lo && bx.hi && *bx.lo > *bx.hi) {
                    if (fail)
                        *fail = "variable " + v +
                                " has empty range: entry bounds force " +
                                rat_str(*bx.lo) + " <= " + v +
                                " <= " + rat_str(*bx.hi);
                    return false;
                }
            }
        }
        if (!changed) break;
    }
    return true;
}

}  // namespace

TripleAnalysis analyze(const ParametricTriples& pt, bool assume_integral,
                       long budget) {
    const TripleScenario& sc = pt.scenario;
    int d = sc.ia.d();
    const auto& p = sc.ia.p();
    TripleAnalysis res;

    std::vector<std::pair<AffineForm, Rat>> constraints;  // (form, upper bound)
    std::vector<Triple> interior;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int h = 1; h <= d; ++h) {
                Rat ub(std::min({p(sc.W, i, j), p(sc.V, i, h), p(sc.U, j, h)}));
                constraints.emplace_back(pt.entries(i, j, h), ub);
                interior.push_back({i, j, h});
            }

    std::map<std::string, Box> vars;
    for (const std::string& v : pt.free_vars) vars[v] = Box{};
    std::string fail;
    if (!propagate(constraints, vars, &fail)) {
        res.verdict = TripleAnalysis::Verdict::contradiction;
        res.reason = fail;
        return res;
    }

    if (!assume_integral) {
        for (size_t c = 0; c < constraints.size(); ++c)
            if (constraints[c].first.terms().empty())
                res.forced[interior[c]] = constraints[c].first.constant();
        return res;
    }

    // constant nonintegral entries contradict immediately
    for (size_t c = 0; c < constraints.size(); ++c)
        if (constraints[c].first.terms().empty() &&
            !is_integer(constraints[c].first.constant())) {
            res.verdict = TripleAnalysis::Verdict::contradiction;
            res.reason = "entry [" + std::to_string(interior[c][0]) + " " +
                         std::to_string(interior[c][1]) + " " +
                         std::to_string(interior[c][2]) + "] = " +
                         rat_str(constraints[c].first.constant()) +
                         " is not an integer";
            return res;
        }

    // enumerate integral assignments, tightest variable first
    std::vector<std::string> order = pt.free_vars;
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        return *vars[a].hi - *vars[a].lo < *vars[b].hi - *vars[b].lo;
    });
    long visited = 0;
    std::map<std::string, Rat> assignment;
    bool exhausted = true;

    std::function<void(size_t, const std::vector<std::pair<AffineForm, Rat>>&,
                       std::map<std::string, Box>)>
        dfs = [&](size_t k, const std::vector<std::pair<AffineForm, Rat>>& cons,
                  std::map<std::string, Box> boxes) {
            if (!exhausted) return;
            if (k == order.size()) {
                // full assignment: verify every entry
                for (const auto& [f, ub] : cons) {
                    const Rat& val = f.constant();
                    if (!f.terms().empty() || val < 0 || val > ub ||
                        !is_integer(val))
                        return;
                }
                Array3D<Rat> point(d + 1);
                for (int i = 0; i <= d; ++i)
                    for (int j = 0; j <= d; ++j)
                        for (int h = 0; h <= d; ++h)
                            point(i, j, h) =
                                pt.entries(i, j, h).evaluate(assignment);
                res.feasible_points.push_back(std::move(point));
                res.feasible_assignments.push_back(assignment);
                return;
            }
            const std::string& v = order[k];
            Int lo = rat_ceil(*boxes[v].lo), hi = rat_floor(*boxes[v].hi);
            for (Int val = lo; val <= hi; ++val) {
                if (++visited > budget) {
                    exhausted = false;
                    return;
                }
                assignment[v] = Rat(val);
                std::vector<std::pair<AffineForm, Rat>> next;
                next.reserve(cons.size());
                for (const auto& [f, ub] : cons)
                    next.emplace_back(substitute(f, {{v, Rat(val)}}), ub);
                auto nboxes = boxes;
                nboxes.erase(v);
                if (propagate(next, nboxes, nullptr))
                    dfs(k + 1, next, std::move(nboxes));
                assignment.erase(v);
                if (!exhausted) return;
            }
        };
    dfs(0, constraints, vars);

    if (!exhausted) {
        res.verdict = TripleAnalysis::Verdict::inconclusive;
        res.reason = "enumeration budget of " + std::to_string(budget) +
                     " candidates exceeded";
        res.feasible_points.clear();
        res.feasible_assignments.clear();
        return res;
    }
    if (res.feasible_points.empty()) {
        res.verdict = TripleAnalysis::Verdict::contradiction;
        res.reason =
            "no nonnegative integral solution for the triple intersection "
            "numbers";
        return res;
    }
    for (size_t c = 0; c < interior.size(); ++c) {
        const Triple& t = interior[c];
        const Rat& first = res.feasible_points[0](t[0], t[1], t[2]);
        bool same = true;
        for (const auto& pt2 : res.feasible_points)
            if (pt2(t[0], t[1], t[2]) != first) {
                same = false;
                break;
            }
        if (same) res.forced[t] = first;
    }
    return res;
}

}  // namespace drg
