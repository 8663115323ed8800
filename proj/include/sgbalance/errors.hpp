#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SGB_DEFINE_ERROR(Name)      \
  struct Name : Error {             \
    using Error::Error;             \
  }

// graph construction / transforms
SGB_DEFINE_ERROR(SelfLoop);
SGB_DEFINE_ERROR(ConflictingSign);
SGB_DEFINE_ERROR(InvalidSign);
SGB_DEFINE_ERROR(UnknownNode);

// ingestion
SGB_DEFINE_ERROR(MissingColumn);
SGB_DEFINE_ERROR(UnparsableWeight);
SGB_DEFINE_ERROR(EmptyFile);
SGB_DEFINE_ERROR(MalformedGml);
SGB_DEFINE_ERROR(IncompleteRanking);
SGB_DEFINE_ERROR(ZeroWeight);

// measures / reporting
SGB_DEFINE_ERROR(InconsistentOptima);
SGB_DEFINE_ERROR(TooSmall);
SGB_DEFINE_ERROR(LengthMismatch);
SGB_DEFINE_ERROR(ZeroVariance);
SGB_DEFINE_ERROR(EmptyGraph);
SGB_DEFINE_ERROR(IoFailure);
SGB_DEFINE_ERROR(ConfigError);

#undef SGB_DEFINE_ERROR

}  // namespace sgb
