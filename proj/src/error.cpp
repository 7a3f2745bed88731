#include "shorbounds/error.hpp"

namespace shorbounds {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::not_a_unit: return "not_a_unit";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::enumeration_too_large: return "enumeration_too_large";
    case ErrorCode::unsupported_even_modulus: return "unsupported_even_modulus";
    case ErrorCode::prime_power_unsupported: return "prime_power_unsupported";
    case ErrorCode::not_squarefree: return "not_squarefree";
    case ErrorCode::not_semiprime: return "not_semiprime";
    case ErrorCode::insufficient_data: return "insufficient_data";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::usage: return "usage_error";
  }
  return "unknown";
}

}  // namespace shorbounds
