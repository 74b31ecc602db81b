#pragma once

#include <stdexcept>
#include <string>

namespace kolchin {

/// Base for all library errors; `code` is the stable machine-readable name
/// used in CLI error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define KOLCHIN_DEFINE_ERROR(Name)                        \
  class Name : public Error {                             \
   public:                                                \
    explicit Name(const std::string& message)             \
        : Error(#Name, message) {}                        \
  }

KOLCHIN_DEFINE_ERROR(InvalidInput);
KOLCHIN_DEFINE_ERROR(NonIntegralCoefficients);
KOLCHIN_DEFINE_ERROR(DegreeNotDropped);
KOLCHIN_DEFINE_ERROR(ZeroElement);
KOLCHIN_DEFINE_ERROR(NonHomogeneousInput);
KOLCHIN_DEFINE_ERROR(UnsupportedRing);
KOLCHIN_DEFINE_ERROR(UnsupportedCodim);
KOLCHIN_DEFINE_ERROR(MultipleOrdersUnsupported);
KOLCHIN_DEFINE_ERROR(NonForcedCoefficient);

#undef KOLCHIN_DEFINE_ERROR

}  // namespace kolchin
