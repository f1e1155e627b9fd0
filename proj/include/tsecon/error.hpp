#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsecon {

/// Broad class of a failure; the CLI maps these onto exit codes.
enum class ErrorCategory {
    Usage,      ///< bad arguments or options
    Data,       ///< parse, gap, alignment, length problems in the inputs
    Numerical,  ///< rank deficiency, singular matrices, degenerate statistics
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    [[nodiscard]] ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

#define TSECON_DEFINE_ERROR(Name, Category)                                  \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(Category, what) {}    \
    };

TSECON_DEFINE_ERROR(UsageError, ErrorCategory::Usage)
TSECON_DEFINE_ERROR(GapError, ErrorCategory::Data)
TSECON_DEFINE_ERROR(EmptyError, ErrorCategory::Data)
TSECON_DEFINE_ERROR(TooShort, ErrorCategory::Data)
TSECON_DEFINE_ERROR(TooFewObservations, ErrorCategory::Data)
TSECON_DEFINE_ERROR(MisalignedResiduals, ErrorCategory::Data)
TSECON_DEFINE_ERROR(MissingBoundsTable, ErrorCategory::Data)
TSECON_DEFINE_ERROR(EmptyGrid, ErrorCategory::Usage)
TSECON_DEFINE_ERROR(DegenerateSeries, ErrorCategory::Numerical)
TSECON_DEFINE_ERROR(SingularRestriction, ErrorCategory::Numerical)
TSECON_DEFINE_ERROR(SingularCovariance, ErrorCategory::Numerical)
TSECON_DEFINE_ERROR(ZeroResiduals, ErrorCategory::Numerical)
TSECON_DEFINE_ERROR(Inconclusive, ErrorCategory::Numerical)
TSECON_DEFINE_ERROR(DegenerateDenominator, ErrorCategory::Numerical)
TSECON_DEFINE_ERROR(IoError, ErrorCategory::Io)

#undef TSECON_DEFINE_ERROR

/// Malformed cell in a CSV input. Row and column are 1-based file coordinates.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row, std::size_t col)
        : Error(ErrorCategory::Data, what + " (row " + std::to_string(row) + ", column " +
                                         std::to_string(col) + ")"),
          row_(row), col_(col) {}

    [[nodiscard]] std::size_t row() const noexcept { return row_; }
    [[nodiscard]] std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

/// A design matrix column that is (numerically) a linear combination of the
/// columns before it. `column` indexes the offending column.
class RankDeficient : public Error {
public:
    RankDeficient(const std::string& what, std::size_t column)
        : Error(ErrorCategory::Numerical, what), column_(column) {}

    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

}  // namespace tsecon
