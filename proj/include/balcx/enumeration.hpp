#pragma once

#include <cstdint>

namespace balcx {

/// Shared limits for the exhaustive enumerators.
struct EnumerationOptions {
  /// Maximum number of search nodes before BudgetExceeded.
  std::uint64_t budget = 200'000'000;
  unsigned jobs = 1;

  /// Defaults, overridden by BC_ENUM_BUDGET when set.
  static EnumerationOptions from_environment();
};

}  // namespace balcx
