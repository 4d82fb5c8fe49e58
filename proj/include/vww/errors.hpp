#ifndef VWW_ERRORS_HPP
#define VWW_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vww {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input array has the wrong length for the grid, or an invalid grid was requested.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A spectral field violates conjugate symmetry beyond tolerance.
class CorruptedFieldError : public Error {
public:
    using Error::Error;
};

/// Two fields that must share a grid do not.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// Negative-order multiplier applied to a field with a nonzero mean mode.
class SingularModeError : public Error {
public:
    using Error::Error;
};

/// Config text could not be parsed or violates a constraint.
class ConfigError : public Error {
public:
    ConfigError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Snapshot file is malformed; `offset` is the byte position of the problem.
class FormatError : public Error {
public:
    FormatError(const std::string& msg, std::uint64_t offset)
        : Error(msg + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::uint64_t offset() const { return offset_; }

private:
    std::uint64_t offset_;
};

/// The simulation produced a non-finite coefficient or runaway energy.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& msg, double t, int mode)
        : Error(msg + " (t=" + std::to_string(t) + ", mode k=" + std::to_string(mode) + ")"),
          t_(t),
          mode_(mode) {}

    double t() const { return t_; }
    int mode() const { return mode_; }

private:
    double t_;
    int mode_;
};

} // namespace vww

#endif // VWW_ERRORS_HPP
