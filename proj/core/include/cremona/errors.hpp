#ifndef CREMONA_ERRORS_HPP
#define CREMONA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cremona {

/// Malformed textual input (bad matrix string, wrong shape, negative entry).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition of an operation does not hold (unequal row sums,
/// non-vertex distinguished point, inverting a non-Cremona map, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic would leave the representable range.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cremona

#endif
