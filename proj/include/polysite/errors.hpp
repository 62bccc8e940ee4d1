#pragma once

#include <stdexcept>

namespace polysite {

// Base type for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// geometry
struct DegeneratePoints : Error { using Error::Error; };
struct ZeroLine : Error { using Error::Error; };
struct TooFewVertices : Error { using Error::Error; };

// linear systems and solving
struct TooFewLines : Error { using Error::Error; };
struct SingularNormalMatrix : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroBasisVector : Error { using Error::Error; };

// grid search
struct InvalidBox : Error { using Error::Error; };

// data ingestion
struct ParseError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct MissingSegment : Error { using Error::Error; };
struct DuplicateSegment : Error { using Error::Error; };
struct UnknownWindow : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace polysite
