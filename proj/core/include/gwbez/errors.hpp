#pragma once

#include <stdexcept>
#include <string>

namespace gwbez {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define GWBEZ_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                            \
    explicit Name(const std::string& msg) : Error(msg) {}          \
  }

// Arithmetic and field construction.
GWBEZ_DEFINE_ERROR(DivisionByZero);
GWBEZ_DEFINE_ERROR(EvenPrime);           // modulus 2 is rejected everywhere
GWBEZ_DEFINE_ERROR(NotPrime);
GWBEZ_DEFINE_ERROR(MismatchedParents);   // operands from different field objects
GWBEZ_DEFINE_ERROR(NotIrreducible);
GWBEZ_DEFINE_ERROR(NotMonic);
GWBEZ_DEFINE_ERROR(UnsupportedCoefficientField);
GWBEZ_DEFINE_ERROR(VariableAbsent);
GWBEZ_DEFINE_ERROR(ZeroInput);
GWBEZ_DEFINE_ERROR(ZeroElement);
GWBEZ_DEFINE_ERROR(NotHenselian);        // no unit y-derivative, no usable branch
GWBEZ_DEFINE_ERROR(PrecisionExhausted);
GWBEZ_DEFINE_ERROR(InsufficientPrecision);

// Bilinear forms and Grothendieck-Witt bookkeeping.
GWBEZ_DEFINE_ERROR(MismatchedField);
GWBEZ_DEFINE_ERROR(DegenerateForm);
GWBEZ_DEFINE_ERROR(NotSymmetric);
GWBEZ_DEFINE_ERROR(UnsupportedField);

// Projective geometry.
GWBEZ_DEFINE_ERROR(NotHomogeneous);
GWBEZ_DEFINE_ERROR(IndexOutOfRange);
GWBEZ_DEFINE_ERROR(DimensionMismatch);
GWBEZ_DEFINE_ERROR(ChartMismatch);

// Intersection pipeline.
GWBEZ_DEFINE_ERROR(CommonComponent);
GWBEZ_DEFINE_ERROR(DegenerateCurve);     // curve vanishes on the line x0 = 0
GWBEZ_DEFINE_ERROR(ShearExhausted);
GWBEZ_DEFINE_ERROR(IncompletePointSet);  // multiplicity audit failed
GWBEZ_DEFINE_ERROR(NonRationalPoint);
GWBEZ_DEFINE_ERROR(ZeroJacobian);
GWBEZ_DEFINE_ERROR(ZeroCoefficient);
GWBEZ_DEFINE_ERROR(ZeroUnit);

// Verification drivers.
GWBEZ_DEFINE_ERROR(NotOrientable);
GWBEZ_DEFINE_ERROR(NonTransverseNonRational);
GWBEZ_DEFINE_ERROR(NonTransverseOverFq);
GWBEZ_DEFINE_ERROR(PointOnDivisor);

// Parsing and plotting.
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};
GWBEZ_DEFINE_ERROR(EmptyWindow);

#undef GWBEZ_DEFINE_ERROR

}  // namespace gwbez
