#pragma once

#include <stdexcept>
#include <string>

namespace spanind {

/// Thrown when an enumeration or a search exceeds its configured budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spanind
