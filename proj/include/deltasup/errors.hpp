#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltasup {

using Coeffs = std::vector<std::int64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// An axiom failed during exhaustive validation. The witness lists the
/// offending elements (ring or module coefficient vectors, or matrix indices).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Coeffs> witness);
  const std::string& axiom() const { return axiom_; }
  const std::vector<Coeffs>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<Coeffs> witness_;
};

class SizeBoundExceeded : public Error {
 public:
  using Error::Error;
};
class NodeBoundExceeded : public Error {
 public:
  using Error::Error;
};
class SearchBoundExceeded : public Error {
 public:
  using Error::Error;
};
class RingMismatch : public Error {
 public:
  using Error::Error;
};
class ParentMismatch : public Error {
 public:
  using Error::Error;
};
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};
class NotDeltaSupplemented : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

std::string format_coeffs(const Coeffs& c);

}  // namespace deltasup
