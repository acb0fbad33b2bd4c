#pragma once
// Error taxonomy for the whole library.  Every failure mode that a caller can
// provoke through the public API has a distinct catchable type; all of them
// derive from rz::Error so the CLI can map them onto exit codes in one place.

#include <stdexcept>
#include <string>

namespace rz {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RZ_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                              \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

// input / parse layer
RZ_DEFINE_ERROR(ParseError);
RZ_DEFINE_ERROR(NonCoprime);
RZ_DEFINE_ERROR(EmptyPolygon);
RZ_DEFINE_ERROR(NotSymmetric);
RZ_DEFINE_ERROR(IndexOutOfRange);
RZ_DEFINE_ERROR(Overflow);

// dimension layer tripwires
RZ_DEFINE_ERROR(NotIntegral);
RZ_DEFINE_ERROR(ClosedFormMismatch);
RZ_DEFINE_ERROR(AssertionFailure);

// Witt / lattice layer
RZ_DEFINE_ERROR(BadModulus);
RZ_DEFINE_ERROR(RingMismatch);
RZ_DEFINE_ERROR(NotAUnit);
RZ_DEFINE_ERROR(PrecisionExhausted);
RZ_DEFINE_ERROR(VectorOutsideWindow);
RZ_DEFINE_ERROR(WindowTooSmall);
RZ_DEFINE_ERROR(NotSelfDual);
RZ_DEFINE_ERROR(NotDieudonne);

// census / sigma layer
RZ_DEFINE_ERROR(BudgetExceeded);
RZ_DEFINE_ERROR(PreconditionViolated);
RZ_DEFINE_ERROR(DegreeCapExceeded);

#undef RZ_DEFINE_ERROR

}  // namespace rz
