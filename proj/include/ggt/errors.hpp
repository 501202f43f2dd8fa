#ifndef GGT_ERRORS_HPP
#define GGT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggt {

// Base error for the library.  `code()` is a stable machine-readable name,
// `what()` carries the witness (offending element, triple, index, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define GGT_DEFINE_ERROR(Name)                              \
  class Name : public Error {                               \
   public:                                                  \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

// model
GGT_DEFINE_ERROR(NotClosed);
GGT_DEFINE_ERROR(NoIdentity);
GGT_DEFINE_ERROR(NoInverse);
GGT_DEFINE_ERROR(NotAssociative);
GGT_DEFINE_ERROR(NotInjectiveHom);
GGT_DEFINE_ERROR(NotAHomomorphism);
GGT_DEFINE_ERROR(MalformedWord);
GGT_DEFINE_ERROR(NotASubgroup);

// cayley
GGT_DEFINE_ERROR(NotSymmetricGeneratingSet);
GGT_DEFINE_ERROR(EmptyPeripheralCopy);
GGT_DEFINE_ERROR(NotInjective);
GGT_DEFINE_ERROR(RadiusTooSmall);

// horoball
GGT_DEFINE_ERROR(CurtailedBase);
GGT_DEFINE_ERROR(CopyMetricMissing);
GGT_DEFINE_ERROR(DepthTooSmall);

// treespace
GGT_DEFINE_ERROR(UnsupportedShape);
GGT_DEFINE_ERROR(MonomorphismMismatch);
GGT_DEFINE_ERROR(NotIsomorphic);

// analyze
GGT_DEFINE_ERROR(TooLargeForExhaustive);
GGT_DEFINE_ERROR(LengthTooLarge);
GGT_DEFINE_ERROR(RadiusOrderViolation);
GGT_DEFINE_ERROR(NotATreeOfSpaces);
GGT_DEFINE_ERROR(UnknownDirection);

// cli / io
GGT_DEFINE_ERROR(ParseError);
GGT_DEFINE_ERROR(UnknownPreset);
GGT_DEFINE_ERROR(IoError);
GGT_DEFINE_ERROR(ConfigError);

#undef GGT_DEFINE_ERROR

}  // namespace ggt

#endif
