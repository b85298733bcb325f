#pragma once

#include <stdexcept>
#include <string>

namespace eos {

/* Caller handed us something outside the operation's domain (x = 0 for
 * a valuation, |x| <= 1 for squarefreeness, ...). */
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/* A documented precondition was violated. The CLI maps this (and
 * domain_error) to exit code 2. */
class precondition_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/* Work would exceed a configured bound (saturation candidate space, ...). */
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* Two independent computations of the same quantity disagreed. Exit code 3. */
class consistency_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace eos
