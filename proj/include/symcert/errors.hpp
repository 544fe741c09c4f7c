#pragma once

#include <stdexcept>
#include <string>

namespace symcert {

/// An index or size outside the range an operation is defined on.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inputs are in range but violate a mathematical precondition
/// (e.g. a tuple outside the Garding cone). Distinct from a negative gap,
/// which is a finding and never an error.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certified bound was observed to fail. This would contradict a proved
/// statement, so it is never swallowed.
class CertificateViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symcert
