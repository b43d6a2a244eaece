#pragma once

#include <stdexcept>

namespace osporb {

// Malformed text that fails the label grammar. CLI maps this to exit 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed input outside the mathematical domain
// (r outside [1, 2k+2], Kac labels off the table, ...). CLI exit 3.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Operation not defined for the requested sector combination: the sl2
// orbifold's twisted (x) twisted products and weight profiles of
// twisted-type labels. A refinement of DomainError; CLI exit 3.
struct UnsupportedSectorError : DomainError {
  using DomainError::DomainError;
};

}  // namespace osporb
