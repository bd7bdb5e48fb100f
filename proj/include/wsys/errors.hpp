#pragma once

#include <stdexcept>
#include <string>

namespace wsys {

/// Malformed textual input (permutation, graph, set system, polynomial).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input outside an operation's domain: non-interlacing pivot
/// orbits, deleting a coloop, a permutation above the configured size cap.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsys
