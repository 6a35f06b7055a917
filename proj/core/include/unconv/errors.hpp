#pragma once

#include <stdexcept>
#include <string>

namespace unconv {

enum class errc {
  digit_out_of_range,
  not_prime,
  prime_mismatch,
  precision_mismatch,
  denominator_divisible_by_p,
  zero_at_precision,
  not_a_unit,
  not_contractive,
  word_too_short,
  value_out_of_range,
  entry_out_of_range,
  alphabet_mismatch,
  coverage_violation,
  budget_exceeded,
  too_few_points,
  incomparable_length,
  empty_sample,
  parse_error,
  validation_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

}  // namespace unconv
