#include "rankfit/error.hpp"

namespace rankfit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::empty_series: return "empty series";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::insufficient_data: return "insufficient data";
    case ErrorKind::singular_system: return "singular system";
    case ErrorKind::fit_failure: return "fit failure";
  }
  return "error";
}

namespace {

std::string decorate(const std::string& message, std::optional<std::size_t> line) {
  if (!line) return message;
  return "line " + std::to_string(*line) + ": " + message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(message, line)), kind_(kind), line_(line) {}

}  // namespace rankfit
