#pragma once

#include <stdexcept>
#include <string>

namespace oddpart {

/// Base class for every recoverable error raised by the library. The
/// stable `name()` is what the CLI prints on stderr and what callers
/// should dispatch on; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define ODDPART_DEFINE_ERROR(Tag)                                   \
    class Tag : public Error {                                      \
    public:                                                         \
        explicit Tag(const std::string& msg) : Error(#Tag, msg) {}  \
    }

// partition_core
ODDPART_DEFINE_ERROR(NonPositiveLength);
ODDPART_DEFINE_ERROR(SumMismatch);
ODDPART_DEFINE_ERROR(WrongCardinality);
ODDPART_DEFINE_ERROR(InvalidExponent);
ODDPART_DEFINE_ERROR(UbViolation);
ODDPART_DEFINE_ERROR(StalledStream);
ODDPART_DEFINE_ERROR(FamilyConstructionError);

// specfun
ODDPART_DEFINE_ERROR(ArgumentOutOfDomain);
ODDPART_DEFINE_ERROR(PrecisionLoss);

// np_spectrum
ODDPART_DEFINE_ERROR(TraceIdentityViolation);
ODDPART_DEFINE_ERROR(NonPositiveEigenvalue);
ODDPART_DEFINE_ERROR(GateFailure);
ODDPART_DEFINE_ERROR(RowLimitExceeded);
ODDPART_DEFINE_ERROR(QuadratureNonConvergence);
ODDPART_DEFINE_ERROR(BracketNotFound);
ODDPART_DEFINE_ERROR(NonMonotoneMap);
ODDPART_DEFINE_ERROR(BudgetExceeded);
ODDPART_DEFINE_ERROR(EigenSolveFailure);

#undef ODDPART_DEFINE_ERROR

}  // namespace oddpart
