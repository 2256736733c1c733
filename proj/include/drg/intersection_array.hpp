#ifndef DRG_INTERSECTION_ARRAY_HPP
#define DRG_INTERSECTION_ARRAY_HPP

#include <optional>
#include <string>
#include <vector>

#include "drg/array3d.hpp"
#include "drg/errors.hpp"
#include "drg/rat.hpp"

namespace drg {

// Intersection numbers p^h_ij of a distance-regular graph.
using PTensor = Array3D<Int>;

// Validated intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d} with all
// derived parameters. Construction computes the full intersection-number
// tensor and rejects any parameter set violating the combinatorial
// feasibility conditions enforced at this level.
class IntersectionArray {
  public:
    IntersectionArray(std::vector<Int> b, std::vector<Int> c);

    static IntersectionArray parse(const std::string& text);
    static IntersectionArray from_srg(const Int& k, const Int& lambda,
                                      const Int& mu);
    static IntersectionArray from_classical(int d, const Int& b,
                                            const Rat& alpha, const Rat& beta);

    int d() const { return d_; }
    const Int& b(int i) const { return b_[i]; }   // 0 <= i <= d (b_d = 0)
    const Int& c(int i) const { return c_[i]; }   // 0 <= i <= d (c_0 = 0)
    const Int& a(int i) const { return a_[i]; }
    const Int& k() const { return b_[0]; }
    const Int& kk(int i) const { return kseq_[i]; }  // k_i
    const Int& n() const { return n_; }

    // p^h_ij, indexed (h, i, j)
    const PTensor& p() const { return p_; }

    bool is_bipartite() const;
    // covering index r for antipodal arrays
    std::optional<Int> antipodal_index() const;

    // SRG parameters (v, k, lambda, mu) when d == 2
    bool is_srg() const { return d_ == 2; }

    // Canonical rendering {b0, b1, ...; c1, ..., cd}
    std::string str() const;

    bool operator==(const IntersectionArray& o) const {
        return b_ == o.b_ && c_ == o.c_;
    }
    bool operator<(const IntersectionArray& o) const {
        return b_ != o.b_ ? b_ < o.b_ : c_ < o.c_;
    }

  private:
    void validate_shape() const;
    void build_tensor();

    int d_;
    std::vector<Int> b_, c_, a_, kseq_;  // all indexed 0..d
    Int n_;
    PTensor p_;
};

}  // namespace drg

#endif
