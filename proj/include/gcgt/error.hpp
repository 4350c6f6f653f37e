#pragma once

#include <stdexcept>
#include <string>

namespace gcgt {

/// Invalid arguments to a generator, construction or experiment.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input graph lies outside an operation's domain (irregular,
/// disconnected, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive search refused because its projected cost exceeds the budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, test-collection or CSV text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Emit a warning line on std::clog unless warnings are silenced.
void warn(const std::string& message);
void set_warnings_enabled(bool enabled);

}  // namespace gcgt
