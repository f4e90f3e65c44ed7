#pragma once

#include <stdexcept>
#include <string>

namespace lsig {

// Malformed or truncated serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Values from different backends were combined.
class SchemeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters failed validation (primality, congruences, bounds).
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A lattice challenge outside the set C reached the prover.
class ChallengeOutOfSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A commit state was used for a second response.
class NonceReuse : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A signing-session operation was called out of phase order.
class SessionStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lsig
