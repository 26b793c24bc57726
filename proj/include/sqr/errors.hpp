#ifndef SQR_ERRORS_HPP
#define SQR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqr {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateInterval : Error { using Error::Error; };
struct SharedEndpoint : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct EmptyIndexSet : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct GeneralPositionViolation : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct InfeasibleAssignment : Error { using Error::Error; };
struct NonPositiveValue : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnsupportedRamsey : Error { using Error::Error; };
struct TooFewNeighbors : Error { using Error::Error; };
struct BadInstance : Error { using Error::Error; };
struct NonCornerIntersection : Error { using Error::Error; };
struct WiringConflict : Error { using Error::Error; };
struct BadCornerDepth : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DuplicateId : Error { using Error::Error; };
struct BadRational : Error { using Error::Error; };

}  // namespace sqr

#endif
