#ifndef DRG_PROOFS_HPP
#define DRG_PROOFS_HPP

#include "drg/triples.hpp"

namespace drg {

// One step of a replayable nonexistence certificate.
struct ProofStep {
    enum class Kind {
        solve_scenario,
        assert_forced,
        pin_from_code_rule,
        counting_bound,
        conclude
    };
    Kind kind;
    std::string description;
    // recorded exact values (rationals as "num/den", affine forms as text)
    std::map<std::string, std::string> values;

    bool operator==(const ProofStep&) const = default;
};

struct Certificate {
    std::string name;   // "family(r,t)", "g1360", "g1600", "bip5"
    std::string array;  // array text (possibly constructor-invalid)
    std::vector<ProofStep> steps;
    enum class Verdict { nonexistent, inconclusive };
    Verdict verdict = Verdict::inconclusive;
};

// Instance of the two-parameter family
// {(2r+1)(4r+1)(4t-1), 8r(4rt-r+2t), (r+t)(4r+1);
//  1, (r+t)(4r+1), 4r(2r+1)(4t-1)}.
struct FamilyInstance {
    Int r, t;
};

// Evaluates the family array at (r, t) >= (1, 1).
IntersectionArray family_array(const Int& r, const Int& t);

// c = ((p+1)^2 + 2a(p+1)/(p+2)) / 4: the Q-polynomiality constraint
// linking the second-eigenmatrix column to the parameters (a, p).
Rat family_qpoly_c(const Rat& a, const Rat& p);

// Inference rule: when the (d,d,d) scenario forces [d d j] = 0 for all
// 0 < j < d (in every index position) and a_d * p^d_dd = c_d, the vertices
// at distance d from a vertex split into maximal 1-codes and any pair of
// vertices at distance d has exactly one vertex of its code at distance d;
// this pins [d d d] = 1 in the (U, V, W) = (d, d-1, 1) scenario. Throws
// InfeasibleError-free logic errors as std::logic_error when the
// preconditions are not established.
std::map<Triple, Rat> code_rule_pin(const IntersectionArray& ia,
                                    const TripleAnalysis& ddd_analysis);

// Counting argument for bipartite graphs at base distance 2: each of the
// p^2_11 common neighbours has k-2 remaining neighbours, all inside the
// {2,2} cell of size p^2_22; each vertex there absorbs at most
// per_vertex_cap of them.
struct CountingOutcome {
    Rat edges_out, capacity;
    bool violated = false;
};
CountingOutcome counting_bound(const IntersectionArray& ia,
                               const Rat& per_vertex_cap);

// Replays one of the built-in nonexistence proofs. Accepted names:
// "g1360", "g1600", "bip5", and "family(r,t)" with integers r, t >= 1.
// The two-argument form runs the named pipeline on the given array; any
// precondition or expected-structure failure yields an inconclusive
// certificate, never a false nonexistence claim.
Certificate prove_builtin(const std::string& name);
Certificate prove_builtin(const std::string& name,
                          const IntersectionArray& ia);

// JSON serialization (rationals rendered as "num/den" text).
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

// Human-readable trace mirroring the proof order.
std::string certificate_trace(const Certificate& cert);

}  // namespace drg

#endif
