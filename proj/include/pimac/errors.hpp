#ifndef PIMAC_ERRORS_HPP
#define PIMAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pimac {

// Raised when an operation needs a bound on a rate that no constraint limits.
class UnboundedRegion : public std::domain_error {
 public:
  explicit UnboundedRegion(int coordinate)
      : std::domain_error("region is unbounded in R" + std::to_string(coordinate)),
        coordinate_(coordinate) {}

  int coordinate() const { return coordinate_; }

 private:
  int coordinate_;
};

// Two results that must agree mathematically did not. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pimac

#endif  // PIMAC_ERRORS_HPP
