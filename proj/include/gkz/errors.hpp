#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

// Exit-code classes used by the CLI: 3 = precondition violation, 4 = internal limit.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArityMismatch : PreconditionError {
    ArityMismatch() : PreconditionError("arity mismatch") {}
    explicit ArityMismatch(const std::string& m) : PreconditionError(m) {}
};

struct SpecializationSingular : PreconditionError {
    explicit SpecializationSingular(const std::string& m = "denominator vanishes under specialization")
        : PreconditionError(m) {}
};

struct NonGenericWeight : PreconditionError {
    explicit NonGenericWeight(const std::string& m = "weight vector has a tied leading form")
        : PreconditionError(m) {}
};

struct InfiniteStaircase : PreconditionError {
    explicit InfiniteStaircase(const std::string& m = "standard monomial set is infinite")
        : PreconditionError(m) {}
};

struct CycleDetected : PreconditionError {
    explicit CycleDetected(const std::string& m = "cover relations contain a cycle") : PreconditionError(m) {}
};

struct DuplicateLabel : PreconditionError {
    explicit DuplicateLabel(const std::string& m = "duplicate element label") : PreconditionError(m) {}
};

struct LatticeTooLarge : LimitError {
    explicit LatticeTooLarge(const std::string& m = "ideal lattice exceeds configured cap") : LimitError(m) {}
};

struct TooLargeForExactWidth : LimitError {
    explicit TooLargeForExactWidth(const std::string& m = "poset too large for exact width search")
        : LimitError(m) {}
};

struct NotTwoChainDecomposable : PreconditionError {
    explicit NotTwoChainDecomposable(const std::string& m = "poset has width > 2") : PreconditionError(m) {}
};

struct HypothesisViolated : PreconditionError {
    explicit HypothesisViolated(const std::string& m) : PreconditionError(m) {}
};

struct NotRowEquivalent : PreconditionError {
    explicit NotRowEquivalent(const std::string& m = "matrix is not row-equivalent to the block form")
        : PreconditionError(m) {}
};

struct MalformedBlocks : PreconditionError {
    explicit MalformedBlocks(const std::string& m = "block data is malformed") : PreconditionError(m) {}
};

struct ParseError : PreconditionError {
    using PreconditionError::PreconditionError;
};

}  // namespace gkz
