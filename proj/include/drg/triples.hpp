#ifndef DRG_TRIPLES_HPP
#define DRG_TRIPLES_HPP

#include <array>
#include <set>

#include "drg/affine.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

using Triple = std::array<int, 3>;

// A triple-intersection-number problem for vertices u, v, w at pairwise
// distances U = d(v,w), V = d(u,w), W = d(u,v). [i j h] counts the
// vertices at distances i, j, h from u, v, w respectively.
struct TripleScenario {
    IntersectionArray ia;
    int U, V, W;
    std::map<Triple, Rat> pins;            // fixed entry values
    std::map<std::string, Triple> params;  // named entries used as parameters
    std::set<Triple> extra_zeros;
    bool use_parity = false;  // parity zeros; always applied when bipartite
};

// Parametric solution of the triple system: every entry of the full
// (d+1)^3 tensor as an affine form over the free-variable names.
struct ParametricTriples {
    TripleScenario scenario;
    Array3D<AffineForm> entries;
    std::vector<std::string> free_vars;
};

struct TripleAnalysis {
    enum class Verdict { consistent, contradiction, inconclusive };
    Verdict verdict = Verdict::consistent;
    std::string reason;  // set for contradiction / inconclusive
    // entries taking the same value in every feasible solution
    std::map<Triple, Rat> forced;
    // fully integral nonnegative solutions (only when assume_integral)
    std::vector<Array3D<Rat>> feasible_points;
    std::vector<std::map<std::string, Rat>> feasible_assignments;
};

// Interior positions (1 <= i,j,h <= d) whose entry must vanish: one of
// p^W_ij, p^V_ih, p^U_jh is zero (subsuming the triangle inequality),
// a parity zero of a bipartite graph (i+j, j+h or h+i odd), or an
// explicit extra zero.
std::set<Triple> zero_pattern(const TripleScenario& sc);

// Triples (i,j,h) with 1 <= i,j,h <= d and q^h_ij = 0, under an optional
// eigenvalue ordering.
std::set<Triple> krein_zero_list(const IntersectionArray& ia,
                                 const std::vector<int>& ordering = {});

// Solves the 3d^2 linear equations together with the Krein-zero
// equations, pins, and zero constraints. Throws InfeasibleError when the
// system is inconsistent (nonexistence evidence) and std::domain_error
// when the scenario is inadmissible (p^W_UV = 0).
ParametricTriples solve_triples(const TripleScenario& sc);

// Re-expresses the solution in terms of the named entries in params
// (each named entry becomes a free variable of that name).
ParametricTriples reparametrize(const ParametricTriples& pt,
                                const std::map<std::string, Triple>& params);

// Nonnegativity/box analysis of a parametric solution; when
// assume_integral is set, enumerates all integral solutions within the
// box bounds (budget = candidate limit before giving up as inconclusive).
TripleAnalysis analyze(const ParametricTriples& pt, bool assume_integral,
                       long budget = 1000000);

}  // namespace drg

#endif
