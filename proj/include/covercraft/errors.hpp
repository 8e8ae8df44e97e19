#pragma once

#include <stdexcept>
#include <string>

namespace covercraft {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error { using Error::Error; };
struct InvalidSurface : Error { using Error::Error; };
struct NotEffective : Error { using Error::Error; };
struct SplittingConstraintViolated : Error { using Error::Error; };
struct NonEffectiveBranch : Error { using Error::Error; };
struct InvalidAlgebraData : Error { using Error::Error; };
struct HalvingNotIntegral : Error { using Error::Error; };
struct CanonicalMorphismViolated : Error { using Error::Error; };
struct InvalidBase : Error { using Error::Error; };
struct TableParseError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace covercraft
