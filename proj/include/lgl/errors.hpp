#pragma once

#include <stdexcept>
#include <string>

namespace lgl {

// Base for all mathematically typed failures. The CLI maps these to exit
// code 1 and puts name() into the report; parse/usage problems are
// SyntaxError (exit code 2).
class MathError : public std::runtime_error {
public:
    MathError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define LGL_DEFINE_ERROR(Name)                                        \
    class Name : public MathError {                                   \
    public:                                                           \
        explicit Name(const std::string& what = #Name)                \
            : MathError(#Name, what) {}                               \
    }

LGL_DEFINE_ERROR(NonSplitDenominator);
LGL_DEFINE_ERROR(NonSplitLeadingCoefficient);
LGL_DEFINE_ERROR(DivisionByZeroPolynomial);
LGL_DEFINE_ERROR(InsufficientPrecision);
LGL_DEFINE_ERROR(StabilizationFailure);
LGL_DEFINE_ERROR(UnnormalizedEigenvalues);
LGL_DEFINE_ERROR(NonRationalEigenvalues);
LGL_DEFINE_ERROR(NotNilpotent);
LGL_DEFINE_ERROR(NotUnipotent);
LGL_DEFINE_ERROR(ExactForm);
LGL_DEFINE_ERROR(InvalidCombination);
LGL_DEFINE_ERROR(PrecisionTooSmall);

#undef LGL_DEFINE_ERROR

// Parse failure with a byte offset into the input text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace lgl
