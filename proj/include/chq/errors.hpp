#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

/// Monotonicity violation in a capacity table. Carries the witness pair
/// (a ⊆ b with w(a) > w(b)) as atom index lists.
class NonMonotone : public Error {
 public:
  NonMonotone(std::string what, std::vector<std::size_t> a, std::vector<std::size_t> b)
      : Error(std::move(what)), witness_a(std::move(a)), witness_b(std::move(b)) {}
  std::vector<std::size_t> witness_a;
  std::vector<std::size_t> witness_b;
};

class BadBoundary : public Error {
 public:
  using Error::Error;
};

class EmptyAmbiguitySet : public Error {
 public:
  using Error::Error;
};

class EmptyList : public Error {
 public:
  using Error::Error;
};

class AlphaOutOfRange : public Error {
 public:
  using Error::Error;
};

class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class NotCoherent : public Error {
 public:
  using Error::Error;
};

class NotSubmodular : public Error {
 public:
  NotSubmodular(std::string what, std::size_t capacity_index)
      : Error(std::move(what)), index(capacity_index) {}
  std::size_t index;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NumericBreakdown : public Error {
 public:
  using Error::Error;
};

class NotSupProbability : public Error {
 public:
  using Error::Error;
};

class MissingRefWeights : public Error {
 public:
  using Error::Error;
};

class CoverViolation : public Error {
 public:
  using Error::Error;
};

class NonMonotoneTransform : public Error {
 public:
  using Error::Error;
};

/// Monotone-likelihood-ratio precondition failed; carries the offending
/// agent and the adjacent atom pair (in the order sorted by X).
class MLRViolated : public Error {
 public:
  MLRViolated(std::string what, std::size_t agent_index, std::size_t atom_lo, std::size_t atom_hi)
      : Error(std::move(what)), agent(agent_index), atom_a(atom_lo), atom_b(atom_hi) {}
  std::size_t agent;
  std::size_t atom_a;
  std::size_t atom_b;
};

class ModeUnsupported : public Error {
 public:
  using Error::Error;
};

class UnsupportedMeasure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string what, std::size_t line_number) : Error(std::move(what)), line(line_number) {}
  std::size_t line;
};

class NonPositivePrice : public Error {
 public:
  NonPositivePrice(std::string what, std::size_t line_number)
      : Error(std::move(what)), line(line_number) {}
  std::size_t line;
};

class TooFewRows : public Error {
 public:
  using Error::Error;
};

class EmptySeries : public Error {
 public:
  using Error::Error;
};

class TooFewObservations : public Error {
 public:
  using Error::Error;
};

class DegenerateSample : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace chq
