#ifndef CVXLAT_ERRORS_HPP
#define CVXLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvxlat {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different ambient spaces.
class DimensionMismatchError : public Error {
  public:
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Fewer points than an operation requires (e.g. Radon needs n+2).
class InsufficientPointsError : public Error {
  public:
    explicit InsufficientPointsError(const std::string& what) : Error(what) {}
};

/// A linear system or point configuration has lower rank than required.
class RankDeficientError : public Error {
  public:
    explicit RankDeficientError(const std::string& what) : Error(what) {}
};

/// Point correspondences admit no exact affine interpolant.
class NonAffineDataError : public Error {
  public:
    explicit NonAffineDataError(const std::string& what) : Error(what) {}
};

/// Oracle samples that no canonical homomorphism form reproduces.
class NotCanonicalError : public Error {
  public:
    explicit NotCanonicalError(const std::string& what) : Error(what) {}
};

/// Samples contradict the case profiles (e.g. mixed points and segments).
class InconsistencyError : public Error {
  public:
    explicit InconsistencyError(const std::string& what) : Error(what) {}
};

/// Dimension-raising segment data in the plane; no classification exists.
class UnsupportedOpenCaseError : public Error {
  public:
    explicit UnsupportedOpenCaseError(const std::string& what) : Error(what) {}
};

/// A verification subject produced output of the wrong shape.
class MalformedSubjectError : public Error {
  public:
    explicit MalformedSubjectError(const std::string& what) : Error(what) {}
};

/// Pole of a hyperplane through the base point is undefined.
class UndefinedPoleError : public Error {
  public:
    explicit UndefinedPoleError(const std::string& what) : Error(what) {}
};

/// Empty or otherwise degenerate transversal family.
class DegenerateFamilyError : public Error {
  public:
    explicit DegenerateFamilyError(const std::string& what) : Error(what) {}
};

/// Input exceeds an exhaustive-enumeration size limit.
class SizeLimitError : public Error {
  public:
    explicit SizeLimitError(const std::string& what) : Error(what) {}
};

/// A constructive search failed; carries the step that failed.
class NotFoundError : public Error {
  public:
    explicit NotFoundError(const std::string& what) : Error(what) {}
};

/// A function value violates its lattice-class constraints.
class ClassViolationError : public Error {
  public:
    explicit ClassViolationError(const std::string& what) : Error(what) {}
};

/// Unparsable or schema-violating input.
class InputError : public Error {
  public:
    explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace cvxlat

#endif
