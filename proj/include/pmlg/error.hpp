#ifndef PMLG_ERROR_HPP
#define PMLG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmlg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : what + ", line " + std::to_string(line)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

class ReductionError : public Error {
public:
    using Error::Error;
};

class OracleBudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace pmlg

#endif
