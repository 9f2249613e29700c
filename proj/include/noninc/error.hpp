#ifndef NONINC_ERROR_HPP
#define NONINC_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace noninc {

enum class errc {
  not_prime,
  reducible_modulus,
  order_too_large,
  wrong_characteristic,
  zero_coefficient,
  index_out_of_range,
  not_square,
  bad_order,
  axiom_violation,
  bad_parameters,
  construction_check_failed,
  odd_order_unsupported,
  not_extremal,
  not_perfect_square,
  too_large,
  plane_mismatch,
  parse_error,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::zero_coefficient: return "ZeroCoefficient";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_square: return "NotSquare";
    case errc::bad_order: return "BadOrder";
    case errc::axiom_violation: return "AxiomViolation";
    case errc::bad_parameters: return "BadParameters";
    case errc::construction_check_failed: return "ConstructionCheckFailed";
    case errc::odd_order_unsupported: return "OddOrderUnsupported";
    case errc::not_extremal: return "NotExtremal";
    case errc::not_perfect_square: return "NotPerfectSquare";
    case errc::too_large: return "TooLarge";
    case errc::plane_mismatch: return "PlaneMismatch";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error class.
///
/// Axiom violations additionally carry the offending row/column (point/line)
/// indices when one can be named.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  error(errc code, const std::string& what, std::optional<std::size_t> row,
        std::optional<std::size_t> col)
      : error(code, what) {
    row_ = row;
    col_ = col;
  }

  errc code() const noexcept { return code_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> col() const noexcept { return col_; }

 private:
  errc code_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
};

}  // namespace noninc

#endif  // NONINC_ERROR_HPP
