#pragma once

#include <stdexcept>
#include <string>

namespace relkit {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operand does not fit the operation: mismatched sources/targets,
/// ill-typed tuples, malformed encodings, non-summable signatures.
struct TypeError : Error {
  using Error::Error;
};

/// A configured materialization or enumeration limit would be exceeded.
struct LimitError : Error {
  using Error::Error;
};

/// Rule text rejected; line/col are 1-based and also baked into what().
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  std::size_t line;
  std::size_t col;
};

/// Schema file rejected.
struct SchemaError : Error {
  using Error::Error;
};

/// Data (CSV) file rejected.
struct DataError : Error {
  using Error::Error;
};

/// Rule rejected during compilation or planning (unknown relation,
/// conflicting variable domains, unsafe rule).
struct QueryError : Error {
  using Error::Error;
};

}  // namespace relkit
