#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

/// Malformed or inconsistent input data (bad matrix, unknown weight name, ...).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A word fails condition (4), condition (5), or dominance.
struct AdmissibilityError : std::runtime_error {
  explicit AdmissibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configurable resource cap (node budget, rewrite budget, copies) was hit.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A state the theory rules out was reached; always a bug or misuse.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace gkm
