#pragma once

#include <stdexcept>
#include <string>

namespace curvezeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- symbolic kernel --------------------------------------------------------
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct NonCoprime : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NonLinearFactor : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };

// -- graphs -----------------------------------------------------------------
struct DuplicateId : Error { using Error::Error; };
struct DanglingEdge : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownEdge : Error { using Error::Error; };
struct NotExceptional : Error { using Error::Error; };
struct ValidationFailure : Error { using Error::Error; };
struct NonIntegralN : Error { using Error::Error; };

// -- zeta / monodromy -------------------------------------------------------
struct PositiveGenus : Error { using Error::Error; };
struct NeighborSameRatio : Error { using Error::Error; };
struct NotStandardForm : Error { using Error::Error; };

// -- polar analysis ---------------------------------------------------------
struct MissingFirstBlowupFlag : Error { using Error::Error; };
struct MissingKappa : Error { using Error::Error; };
struct MissingContactOrders : Error { using Error::Error; };

// -- blow-up engine ---------------------------------------------------------
struct ZeroDirection : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NotSquareFree : Error { using Error::Error; };
struct SharedComponent : Error { using Error::Error; };
struct IterationLimit : Error { using Error::Error; };
struct GenericityUncertain : Error { using Error::Error; };

// A required blow-up centre is an algebraic point with no rational
// coordinates; carries the centre's minimal polynomial over Q.
struct NonRationalCenter : Error {
    std::string minimal_poly;
    explicit NonRationalCenter(const std::string& poly)
        : Error("blow-up centre is not rational, minimal polynomial " + poly),
          minimal_poly(poly) {}
};

} // namespace curvezeta
