#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shorbounds {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
  domain,
  not_a_unit,
  out_of_range,
  enumeration_too_large,
  unsupported_even_modulus,
  prime_power_unsupported,
  not_squarefree,
  not_semiprime,
  insufficient_data,
  overflow,
  usage,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shorbounds
