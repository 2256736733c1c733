#ifndef DRG_DERIVED_HPP
#define DRG_DERIVED_HPP

#include <map>
#include <set>

#include "drg/intersection_array.hpp"

namespace drg {

// Parameter constructions for graphs derived from a distance-regular graph.

// Folded graph of an antipodal cover. Requires antipodal_index().
IntersectionArray antipodal_quotient(const IntersectionArray& ia);

// Halved graph of a bipartite graph. Requires is_bipartite() and d >= 2.
IntersectionArray bipartite_half(const IntersectionArray& ia);

// Complement of a strongly regular graph. Requires d == 2 and a connected
// complement.
IntersectionArray complement_srg(const IntersectionArray& ia);

// Merges the distance classes in S (a nonempty subset of {1..d}) into a
// single adjacency relation. Returns the intersection array of the merged
// graph (restricted to its connected component through class 0), or
// nullopt when the merged relation is not distance-regular.
std::optional<IntersectionArray> merge_classes(const IntersectionArray& ia,
                                               const std::set<int>& S);

// All successful merges other than the trivial ones: S = {1} (the graph
// itself) and S = {1..d} (the complete graph).
std::map<std::set<int>, IntersectionArray> distance_graphs(
    const IntersectionArray& ia);

}  // namespace drg

#endif
