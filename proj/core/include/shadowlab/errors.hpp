#pragma once

#include <stdexcept>
#include <string>

namespace shadowlab {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands have incompatible sizes (vector lengths, matrix shapes).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A square linear system has no unique solution.
class SingularSystemError : public Error {
 public:
  explicit SingularSystemError(const std::string& what) : Error(what) {}
};

/// Malformed textual input (rationals, .hpoly files, bit strings).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A parameter is outside its admissible range (e.g. eps not in (0,1/2)).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Box bounds with some lower >= upper.
class DegenerateBoxError : public ParameterError {
 public:
  explicit DegenerateBoxError(const std::string& what) : ParameterError(what) {}
};

/// Row set whose submatrix is singular, so it does not define a vertex.
class NonBasisError : public Error {
 public:
  explicit NonBasisError(const std::string& what) : Error(what) {}
};

/// Basis point violates some inequality of the polytope.
class InfeasibleBasisError : public Error {
 public:
  explicit InfeasibleBasisError(const std::string& what) : Error(what) {}
};

/// An enumeration guard (candidate-basis or corner count) was exceeded.
class InstanceTooLargeError : public Error {
 public:
  explicit InstanceTooLargeError(const std::string& what) : Error(what) {}
};

/// A closed form disagreed with its defining recursion. Must never fire.
class FormulaMismatchError : public Error {
 public:
  explicit FormulaMismatchError(const std::string& what) : Error(what) {}
};

/// Projection vectors are linearly dependent.
class IndependenceError : public Error {
 public:
  explicit IndependenceError(const std::string& what) : Error(what) {}
};

/// Start basis is not optimal for the initial sweep objective.
class BadStartError : public Error {
 public:
  explicit BadStartError(const std::string& what) : Error(what) {}
};

/// Exact tie where the sweep assumes a unique choice.
class GenericityError : public Error {
 public:
  explicit GenericityError(const std::string& what) : Error(what) {}
};

/// A vertex with more than dim tight inequalities was encountered.
class DegeneracyError : public Error {
 public:
  explicit DegeneracyError(const std::string& what) : Error(what) {}
};

/// An improving edge has no blocking constraint.
class UnboundedError : public Error {
 public:
  explicit UnboundedError(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure while reading or writing artifacts.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace shadowlab
