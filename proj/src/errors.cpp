#include "hyperchrom/errors.hpp"

#include <sstream>

namespace hyperchrom {

std::string BudgetExceeded::describe(const std::string& cap, long double required, long double allowed) {
  std::ostringstream os;
  os << "budget exceeded for " << cap << ": requires " << static_cast<double>(required) << ", cap is "
     << static_cast<double>(allowed) << " (raise via HYPERCHROM_BUDGET)";
  return os.str();
}

}  // namespace hyperchrom
