#ifndef RANKFIT_ERROR_HPP
#define RANKFIT_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankfit {

enum class ErrorKind {
  parse,             // malformed input cell
  validation,        // well-formed input that violates a series invariant
  empty_series,      // nothing left to work with
  domain,            // argument outside a model's domain
  insufficient_data, // too few ranks for the requested fit
  singular_system,   // rank-deficient design matrix
  fit_failure,       // optimizer found no finite objective
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. The kind drives CLI exit codes;
/// `line()` is set for errors that point at an input line (1-based).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace rankfit

#endif  // RANKFIT_ERROR_HPP
