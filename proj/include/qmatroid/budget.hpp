#pragma once

#include <cstdint>

#include "qmatroid/errors.hpp"
#include "qmatroid/numeric.hpp"

namespace qmatroid {

// State spaces grow like (q-1)^|E| or q^|V|(q-1)^|E|; every enumerating
// operation checks its state count against a budget before looping.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

inline void check_budget(const Int& states, std::uint64_t budget, const char* what) {
  if (states > Int(budget)) {
    fail(ErrorKind::EnumerationBudgetExceeded,
         std::string(what) + " needs " + states.str() + " states, budget is " +
             std::to_string(budget));
  }
}

}  // namespace qmatroid
