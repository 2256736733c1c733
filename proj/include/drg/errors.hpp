#ifndef DRG_ERRORS_HPP
#define DRG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

// A parameter set has been proven infeasible. Carries the violated rule or
// check and the supporting reference tags.
class InfeasibleError : public std::runtime_error {
  public:
    InfeasibleError(std::string reason, std::vector<std::string> refs = {})
        : std::runtime_error(reason), reason_(std::move(reason)),
          refs_(std::move(refs)) {}

    const std::string& reason() const { return reason_; }
    const std::vector<std::string>& refs() const { return refs_; }

  private:
    std::string reason_;
    std::vector<std::string> refs_;
};

// A computation outside the supported exact-arithmetic surface.
class UnsupportedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace drg

#endif
