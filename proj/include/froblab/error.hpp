#ifndef FROBLAB_ERROR_HPP
#define FROBLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace froblab {

enum class errc {
  ring_mismatch,
  not_perfect,
  not_a_field,
  not_a_domain,
  division_by_zero,
  zero_denominator,
  denominator_not_in_s,
  empty_input,
  not_free,
  not_finite_dimensional,
  bound_too_small,
  point_not_rational,
  multiple_points,
  invalid_params,
  syntax_error,
  unknown_symbol,
  unsupported_ring,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::ring_mismatch: return "RingMismatch";
    case errc::not_perfect: return "NotPerfect";
    case errc::not_a_field: return "NotAField";
    case errc::not_a_domain: return "NotADomain";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::denominator_not_in_s: return "DenominatorNotInS";
    case errc::empty_input: return "EmptyInput";
    case errc::not_free: return "NotFree";
    case errc::not_finite_dimensional: return "NotFiniteDimensional";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::point_not_rational: return "PointNotRational";
    case errc::multiple_points: return "MultiplePoints";
    case errc::invalid_params: return "InvalidParams";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::unsupported_ring: return "UnsupportedRing";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

/// Library-wide exception type. `code()` maps one-to-one onto the JSON error
/// codes emitted by the CLI.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  errc code_;
  std::string detail_;
};

[[noreturn]] inline void fail(errc code, std::string detail) {
  throw Error(code, std::move(detail));
}

inline void require(bool cond, errc code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace froblab

#endif  // FROBLAB_ERROR_HPP
