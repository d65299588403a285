#pragma once

#include <stdexcept>
#include <string>

namespace dessin {

struct MalformedPassport : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotATree : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateN : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPrimePlusOne : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroPolynomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegeneratePassport : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoSolutionsFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularNormalization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleEvaluation : std::domain_error {
  using std::domain_error::domain_error;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dessin
