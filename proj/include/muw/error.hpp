#pragma once

#include <stdexcept>
#include <string>

#include "muw/stats.hpp"

namespace muw {

// Exit codes shared by the CLI; the error categories below map onto them.
enum class exit_code : int {
  ok = 0,
  usage = 1,
  resource_limit = 2,
  invalid_input = 3,
};

/// Malformed argument, word outside the alphabet, unsatisfied precondition.
class invalid_input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is well-formed but does not apply to this instance
/// (e.g. the anchor word does not occur, or a set lacks the required form).
class not_applicable_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Two independent membership routes disagreed. Always a bug.
class internal_inconsistency_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace muw
