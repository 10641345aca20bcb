#include "balcx/enumeration.hpp"

#include <cstdlib>
#include <string>

#include "balcx/errors.hpp"

namespace balcx {

EnumerationOptions EnumerationOptions::from_environment() {
  EnumerationOptions options;
  if (const char* env = std::getenv("BC_ENUM_BUDGET")) {
    try {
      options.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("BC_ENUM_BUDGET is not a number: ") + env);
    }
  }
  return options;
}

}  // namespace balcx
