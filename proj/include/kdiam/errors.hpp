#pragma once

#include <stdexcept>
#include <string>

namespace kdiam {

enum class ErrorKind {
  dimension_mismatch,
  invalid_body,
  degenerate_configuration,
  index_out_of_range,
  invalid_instance,
  invalid_spec,
  parse_error,
  unsupported_dimension,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::invalid_body: return "invalid-body";
    case ErrorKind::degenerate_configuration: return "degenerate-configuration";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::invalid_instance: return "invalid-instance";
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::unsupported_dimension: return "unsupported-dimension";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kdiam
