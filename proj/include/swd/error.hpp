#pragma once

#include <stdexcept>
#include <string>

namespace swd {

// Raised when an operation is called outside its mathematical domain
// (index out of range, parity violation, non-invertible element, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace swd
