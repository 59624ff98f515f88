#pragma once

#include <stdexcept>
#include <string>

namespace actcode {

/// Malformed or inconsistent user input: bad files, bad manifests, bad flags.
/// Preconditions violated by library callers raise std::invalid_argument.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No joint moves at all, so variance normalization is undefined.
class DegenerateActionError : public std::domain_error {
 public:
  DegenerateActionError() : std::domain_error("degenerate action: every joint variance is zero") {}
  explicit DegenerateActionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace actcode
