#pragma once

#include <stdexcept>
#include <string>

namespace ral {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RAL_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

RAL_DEFINE_ERROR(DimensionMismatch);
RAL_DEFINE_ERROR(InvalidSize);
RAL_DEFINE_ERROR(InvalidPermutation);
RAL_DEFINE_ERROR(SizeExceeded);
RAL_DEFINE_ERROR(DomainError);
RAL_DEFINE_ERROR(QuadratureFailure);
RAL_DEFINE_ERROR(EmptySample);
RAL_DEFINE_ERROR(InsufficientData);
RAL_DEFINE_ERROR(ParseError);
RAL_DEFINE_ERROR(SchemaError);
RAL_DEFINE_ERROR(IoError);

#undef RAL_DEFINE_ERROR

}  // namespace ral
