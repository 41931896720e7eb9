#pragma once

#include <stdexcept>
#include <string>

namespace degenlab {

// Every library failure derives from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DEGENLAB_ERROR(Name)          \
  struct Name : Error {               \
    using Error::Error;               \
    Name() : Error(#Name) {}          \
  }

DEGENLAB_ERROR(DivisionByZero);
DEGENLAB_ERROR(PoleAtZero);
DEGENLAB_ERROR(NotNilpotent);
DEGENLAB_ERROR(Singular);
DEGENLAB_ERROR(AmbientMismatch);
DEGENLAB_ERROR(DimensionMismatch);
DEGENLAB_ERROR(NotASubalgebra);
DEGENLAB_ERROR(NotEngelAt);
DEGENLAB_ERROR(IncomparableMaxima);
DEGENLAB_ERROR(SingularFamily);
DEGENLAB_ERROR(UnknownKind);
DEGENLAB_ERROR(DimensionOutOfRange);
DEGENLAB_ERROR(NotSkew);
DEGENLAB_ERROR(NotSurjective);
DEGENLAB_ERROR(PreconditionViolated);
DEGENLAB_ERROR(ParseError);
DEGENLAB_ERROR(InconsistentLedger);

#undef DEGENLAB_ERROR

}  // namespace degenlab
