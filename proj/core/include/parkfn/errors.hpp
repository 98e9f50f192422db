#pragma once

#include <stdexcept>
#include <string>

namespace parkfn {

// Thrown before any work starts when an enumeration or brute-force scan
// would visit more candidates than the configured budget allows.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parkfn
