#ifndef SPECBISECT_ERRORS_HPP
#define SPECBISECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specbisect {

// Error taxonomy. The CLI maps each class onto a distinct exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed caller input: bad vertex ids, overlapping sets, invalid parameters.
struct InputError : Error {
  using Error::Error;
};

// Unparseable input stream; carries the 1-based line number of the offense.
struct ParseError : InputError {
  ParseError(long line_no, const std::string& what)
      : InputError("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  long line;
};

// Structurally valid input outside an operation's domain
// (disconnected graph, odd vertex count, ...).
struct DomainError : Error {
  using Error::Error;
};

// An exhaustive solver's size guard tripped.
struct ResourceError : Error {
  using Error::Error;
};

// Numerical failure; carries the residual that was achieved.
struct NumericError : Error {
  NumericError(const std::string& what, double achieved)
      : Error(what), residual(achieved) {}
  double residual;
};

}  // namespace specbisect

#endif  // SPECBISECT_ERRORS_HPP
