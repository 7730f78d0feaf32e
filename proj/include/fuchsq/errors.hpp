#ifndef FUCHSQ_ERRORS_HPP
#define FUCHSQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuchsq {

// Input could not be tokenized / parsed.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed but violates a model invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical precondition failures (exit code 2 in the CLI).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquareError : PreconditionError {
    explicit NotSquareError(const std::string& what) : PreconditionError(what) {}
};
struct NotConstantError : PreconditionError {
    explicit NotConstantError(const std::string& what) : PreconditionError(what) {}
};
struct NonRationalSpectrumError : PreconditionError {
    explicit NonRationalSpectrumError(const std::string& what) : PreconditionError(what) {}
};
struct NotLogarithmicError : PreconditionError {
    explicit NotLogarithmicError(const std::string& what) : PreconditionError(what) {}
};
struct NotEigenvectorError : PreconditionError {
    explicit NotEigenvectorError(const std::string& what) : PreconditionError(what) {}
};
struct InfinitePointError : PreconditionError {
    explicit InfinitePointError(const std::string& what) : PreconditionError(what) {}
};
struct NotInSpectrumError : PreconditionError {
    explicit NotInSpectrumError(const std::string& what) : PreconditionError(what) {}
};
struct NotNormalizedError : PreconditionError {
    explicit NotNormalizedError(const std::string& what) : PreconditionError(what) {}
};
struct NotTrivialBundleError : PreconditionError {
    explicit NotTrivialBundleError(const std::string& what) : PreconditionError(what) {}
};
struct NotRankOneError : PreconditionError {
    explicit NotRankOneError(const std::string& what) : PreconditionError(what) {}
};
struct ZeroSubsheafError : PreconditionError {
    explicit ZeroSubsheafError(const std::string& what) : PreconditionError(what) {}
};
struct FullRankError : PreconditionError {
    explicit FullRankError(const std::string& what) : PreconditionError(what) {}
};
struct ObstructionNonzeroError : PreconditionError {
    explicit ObstructionNonzeroError(const std::string& what) : PreconditionError(what) {}
};
struct ScreenFailedError : PreconditionError {
    explicit ScreenFailedError(const std::string& what) : PreconditionError(what) {}
};
struct RankTooSmallError : PreconditionError {
    explicit RankTooSmallError(const std::string& what) : PreconditionError(what) {}
};
struct NoEligibleEigenvectorError : PreconditionError {
    explicit NoEligibleEigenvectorError(const std::string& what) : PreconditionError(what) {}
};
struct SpacingViolationError : PreconditionError {
    explicit SpacingViolationError(const std::string& what) : PreconditionError(what) {}
};

// A checked internal postcondition failed.  Always a bug (exit code 3).
struct InternalAssertionFailure : std::logic_error {
    explicit InternalAssertionFailure(const std::string& what) : std::logic_error(what) {}
};

struct InternalInconsistencyError : InternalAssertionFailure {
    explicit InternalInconsistencyError(const std::string& what) : InternalAssertionFailure(what) {}
};

}  // namespace fuchsq

#endif
