#pragma once

#include <stdexcept>
#include <string>

namespace abh {

/// A proved invariant failed at runtime; always a bug, never a user error.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace abh
