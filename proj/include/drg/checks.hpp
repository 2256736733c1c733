#ifndef DRG_CHECKS_HPP
#define DRG_CHECKS_HPP

#include <optional>
#include <set>
#include <utility>

#include "drg/intersection_array.hpp"

namespace drg {

enum class CheckStatus { pass, fail, skipped, not_implemented };

struct CheckOutcome {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string message;                  // reason on failure
    std::vector<std::string> refs;        // reference tags on failure
};

// Feasibility report for one array, with nested reports for every derived
// parameter set that was checked recursively. The overall verdict is
// infeasible iff any outcome in the tree failed.
struct CheckReport {
    IntersectionArray array;
    std::vector<CheckOutcome> outcomes;
    std::vector<std::pair<std::string, CheckReport>> derived;

    bool feasible() const;
    // "path: nonexistence by Tag" for the first failure in the tree
    std::optional<std::string> first_failure() const;
};

// Names of all catalogued checks, in battery order (including the
// registered-but-unimplemented ones).
const std::vector<std::string>& check_catalog();

CheckOutcome check_sporadic(const IntersectionArray& ia);
CheckOutcome check_family(const IntersectionArray& ia);
CheckOutcome check_classical_families(const IntersectionArray& ia);
// Also reports derived strongly regular graphs (descendant two-graph
// structure, Taylor local graph) for recursive checking.
CheckOutcome check_2graph(
    const IntersectionArray& ia,
    std::vector<std::pair<std::string, IntersectionArray>>* derived_out =
        nullptr);
CheckOutcome check_conference(const IntersectionArray& ia);
CheckOutcome check_geodetic_embedding(const IntersectionArray& ia);
CheckOutcome check_hadamard(const IntersectionArray& ia);
CheckOutcome check_gen_poly(const IntersectionArray& ia);
CheckOutcome check_combinatorial_basic(const IntersectionArray& ia);
CheckOutcome check_absolute_bound(const IntersectionArray& ia);

// Runs the full battery, then recurses into the antipodal quotient,
// bipartite half, complement, derived strongly regular graphs, and all
// distance-graph merges (merging is attempted only for d <= 8). A visited
// set guarantees each distinct array is checked at most once.
CheckReport check_feasible(const IntersectionArray& ia,
                           const std::set<std::string>& skip = {},
                           bool recurse = true);

// Bibliographic record backing a reference tag.
struct RefEntry {
    std::string tag;
    // (surname, given names)
    std::vector<std::pair<std::string, std::vector<std::string>>> authors;
    std::string title, journal, fjournal, type;
    std::optional<long> number, volume, year;
    std::optional<std::pair<long, long>> pages;
};

// Looks up a tag in the reference database; throws std::out_of_range for
// unknown tags.
const RefEntry& refs_lookup(const std::string& tag);

}  // namespace drg

#endif
