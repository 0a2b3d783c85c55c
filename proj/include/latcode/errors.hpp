#pragma once

#include <stdexcept>
#include <string>

namespace latcode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LATCODE_DEFINE_ERROR(Name) \
    struct Name : Error {          \
        using Error::Error;        \
    }

LATCODE_DEFINE_ERROR(InvalidField);
LATCODE_DEFINE_ERROR(FieldMismatch);
LATCODE_DEFINE_ERROR(NotPrime);
LATCODE_DEFINE_ERROR(UnsupportedSplitting);
LATCODE_DEFINE_ERROR(DivisionByZero);
LATCODE_DEFINE_ERROR(RankDeficient);
LATCODE_DEFINE_ERROR(NotSystematic);
LATCODE_DEFINE_ERROR(SearchFailed);
LATCODE_DEFINE_ERROR(InvalidInput);
LATCODE_DEFINE_ERROR(PreconditionFailed);
LATCODE_DEFINE_ERROR(Unsupported);
LATCODE_DEFINE_ERROR(NotPositiveDefinite);
LATCODE_DEFINE_ERROR(NeedLargerPrefix);
LATCODE_DEFINE_ERROR(InternalInconsistency);
LATCODE_DEFINE_ERROR(ParseError);

#undef LATCODE_DEFINE_ERROR

}  // namespace latcode
