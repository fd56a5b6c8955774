#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swanlab {

// Base class for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Raised whenever a result would depend on coefficients beyond the known
// precision window. The library errs instead of guessing.
struct PrecisionExhausted : Error {
    PrecisionExhausted() : Error("precision exhausted") {}
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

struct InvalidEmbedding : Error {
    explicit InvalidEmbedding(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Reduction iteration cap hit; signals a precision or logic fault, never a
// mathematically expected outcome.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

struct SearchSpaceTooLarge : Error {
    explicit SearchSpaceTooLarge(const std::string& what) : Error(what) {}
};

struct InvalidBreaks : Error {
    explicit InvalidBreaks(const std::string& what) : Error(what) {}
};

// Asymptotic psi formula requested below its validity threshold; carries the
// threshold as an exact fraction.
struct BelowThreshold : Error {
    BelowThreshold(const std::string& what, long long thr_num, long long thr_den)
        : Error(what), threshold_num(thr_num), threshold_den(thr_den) {}
    long long threshold_num;
    long long threshold_den;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

struct UndefinedVariable : Error {
    explicit UndefinedVariable(const std::string& what) : Error(what) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

// Malformed case files, inconsistent flags, and similar user-input problems.
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace swanlab
