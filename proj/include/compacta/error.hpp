#ifndef COMPACTA_ERROR_HPP
#define COMPACTA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "compacta/bigint.hpp"

namespace compacta {

/// Base for all domain errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised by the exhaustive generators when the estimated output exceeds the budget.
class budget_exceeded : public error {
 public:
  budget_exceeded(const integer& estimate, const integer& budget)
      : error("enumeration budget exceeded: estimated " + estimate.get_str() +
              " objects, budget " + budget.get_str()),
        estimate_(estimate) {}

  const integer& estimate() const noexcept { return estimate_; }

 private:
  integer estimate_;
};

class seed_unavailable : public error {
 public:
  using error::error;
};

/// A streamed egf value n!*a_n that is not an integer: wrong seeds or a wrong operator.
class integrality_error : public error {
 public:
  using error::error;
};

class recurrence_error : public error {
 public:
  using error::error;
};

}  // namespace compacta

#endif  // COMPACTA_ERROR_HPP
