#ifndef NUMERAL_HMM_ERRORS_HPP
#define NUMERAL_HMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace numeral_hmm {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// I/O and file-format problems (exit code 2 territory in the CLI).
struct IoError : Error {
    using Error::Error;
};
struct FormatError : Error {
    using Error::Error;
};

struct BadMagicError : FormatError {
    using FormatError::FormatError;
};
struct CountMismatchError : FormatError {
    using FormatError::FormatError;
};
struct TruncatedError : FormatError {
    using FormatError::FormatError;
};
struct BadLabelError : FormatError {
    using FormatError::FormatError;
};
struct BadHeaderError : FormatError {
    using FormatError::FormatError;
};
struct MaxvalUnsupportedError : FormatError {
    using FormatError::FormatError;
};
struct BankSchemaError : FormatError {
    int line = 0;
    BankSchemaError(const std::string& msg, int line_no)
        : FormatError("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Domain preconditions.
struct EmptyImageError : Error {
    using Error::Error;
};
struct NotForegroundError : Error {
    using Error::Error;
};
struct NotAdjacentError : Error {
    using Error::Error;
};
struct EmptySkeletonError : Error {
    using Error::Error;
};
struct EmptySequenceError : Error {
    using Error::Error;
};
struct SymbolOutOfRangeError : Error {
    using Error::Error;
};
struct NoTrainingDataError : Error {
    using Error::Error;
};
struct MissingClassError : Error {
    int digit;
    explicit MissingClassError(int d)
        : Error("no training sequences for digit " + std::to_string(d)), digit(d) {}
};
struct InsufficientSamplesError : Error {
    int digit;
    long have;
    long need;
    InsufficientSamplesError(int d, long h, long n)
        : Error("class " + std::to_string(d) + " has " + std::to_string(h) +
                " samples, needs " + std::to_string(n)),
          digit(d), have(h), need(n) {}
};

// A broken internal invariant (exit code 3 in the CLI). Not a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace numeral_hmm

#endif
