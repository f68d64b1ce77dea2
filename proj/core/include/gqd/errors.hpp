#pragma once

#include <stdexcept>
#include <string>

namespace gqd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GQD_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

GQD_DEFINE_ERROR(NonHermitian);
GQD_DEFINE_ERROR(NotPSD);
GQD_DEFINE_ERROR(InvalidState);
GQD_DEFINE_ERROR(NotXState);
GQD_DEFINE_ERROR(UnsupportedXState);
GQD_DEFINE_ERROR(OptimizerDiverged);
GQD_DEFINE_ERROR(DomainError);
GQD_DEFINE_ERROR(StepTooLarge);
GQD_DEFINE_ERROR(ConfigError);
GQD_DEFINE_ERROR(IoError);

#undef GQD_DEFINE_ERROR

}  // namespace gqd
