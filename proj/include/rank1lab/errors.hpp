#ifndef RANK1LAB_ERRORS_HPP
#define RANK1LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rank1lab {

// Base class for all library errors; message carries the failing detail.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// origami-core
struct BadPermutation : Error {
    explicit BadPermutation(const std::string& what) : Error(what) {}
};
struct NotTransitive : Error {
    explicit NotTransitive(const std::string& what) : Error(what) {}
};
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

// sl2z-orbit
struct OrbitBudgetExceeded : Error {
    explicit OrbitBudgetExceeded(const std::string& what) : Error(what) {}
};

// cyclic-covers
struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& what) : Error(what) {}
};
struct NotOrientable : Error {
    explicit NotOrientable(const std::string& what) : Error(what) {}
};

// kz-lyapunov
struct DegenerateFrame : Error {
    explicit DegenerateFrame(const std::string& what) : Error(what) {}
};

// cli-harness / io
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};
struct InvalidDirection : Error {
    explicit InvalidDirection(const std::string& what) : Error(what) {}
};
struct IoFailure : Error {
    explicit IoFailure(const std::string& what) : Error(what) {}
};
struct ResumeMismatch : Error {
    explicit ResumeMismatch(const std::string& what) : Error(what) {}
};

} // namespace rank1lab

#endif
