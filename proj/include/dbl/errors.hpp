#pragma once

#include <stdexcept>
#include <string>

namespace dbl {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define DBL_ERROR_TYPE(Name)                                    \
  struct Name : Error {                                         \
    explicit Name(const std::string& what = #Name)              \
        : Error(std::string(#Name) + ": " + what) {}            \
  }

DBL_ERROR_TYPE(UnsupportedParameter);
DBL_ERROR_TYPE(DegenerateSpec);
DBL_ERROR_TYPE(NotDihedralSylow);
DBL_ERROR_TYPE(ElementNotInGroup);
DBL_ERROR_TYPE(InconsistentCount);
DBL_ERROR_TYPE(FrameMismatch);
DBL_ERROR_TYPE(DefectTooSmall);
DBL_ERROR_TYPE(ShapeMismatch);
DBL_ERROR_TYPE(FieldMismatch);
DBL_ERROR_TYPE(NotASubgroup);
DBL_ERROR_TYPE(WrongFamily);
DBL_ERROR_TYPE(FieldTooSmall);
DBL_ERROR_TYPE(CapExceeded);
DBL_ERROR_TYPE(IncompleteLibrary);
DBL_ERROR_TYPE(NotPSubgroup);
DBL_ERROR_TYPE(SideMismatch);
DBL_ERROR_TYPE(NoSuitablePrime);
DBL_ERROR_TYPE(GroupTooLarge);
DBL_ERROR_TYPE(NonIntegralCentralCharacter);
DBL_ERROR_TYPE(CaseParameterMismatch);
DBL_ERROR_TYPE(WrongFusionCase);
DBL_ERROR_TYPE(ParseError);
DBL_ERROR_TYPE(InternalError);

#undef DBL_ERROR_TYPE

}  // namespace dbl
