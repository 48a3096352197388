#pragma once

#include <stdexcept>
#include <string>

namespace ttspec {

// Raised for invalid mathematical input: bad permutations, non-subgroups,
// order-cap overflow, topology queries the current mode cannot answer.
class DomainError : public std::runtime_error
{
public:
  explicit DomainError(const std::string &what)
  : std::runtime_error(what)
  {}
};

// Internal consistency failure. Seeing one of these means a bug.
class InternalError : public std::logic_error
{
public:
  explicit InternalError(const std::string &what)
  : std::logic_error(what)
  {}
};

} // namespace ttspec
