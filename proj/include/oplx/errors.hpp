#ifndef OPLX_ERRORS_HPP
#define OPLX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oplx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error { using Error::Error; };
struct ContainmentViolation : Error { using Error::Error; };
struct InvalidSize : Error { using Error::Error; };
struct DegreeOutOfRange : Error { using Error::Error; };
struct InvalidDimension : Error { using Error::Error; };
struct InvalidPartition : Error { using Error::Error; };
struct NonClosingPath : Error { using Error::Error; };
struct SpecOutOfRange : Error { using Error::Error; };
struct UnrecognizedPattern : Error { using Error::Error; };
struct SpecsDoNotShareEdge : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct InvalidCell : Error { using Error::Error; };
struct OffsetOutOfRange : Error { using Error::Error; };
struct PathDoesNotEncircle : Error { using Error::Error; };
struct ShapeTooSmall : Error { using Error::Error; };

} // namespace oplx

#endif
