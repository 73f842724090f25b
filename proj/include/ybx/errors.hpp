#pragma once

#include <stdexcept>

namespace ybx {

// Precondition and construction failures. Leaving the domain of definition of
// a birational map is not an exception: operations that can do so return
// std::optional and the sampling layer treats an empty result as "resample".
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error { using Error::Error; };
struct ZeroCoordinate : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct ZeroMatrix : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct FamilyMismatch : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace ybx
