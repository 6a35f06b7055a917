#include "unconv/errors.hpp"

namespace unconv {

const char* errc_name(errc c) {
  switch (c) {
    case errc::digit_out_of_range: return "DigitOutOfRange";
    case errc::not_prime: return "NotPrime";
    case errc::prime_mismatch: return "PrimeMismatch";
    case errc::precision_mismatch: return "PrecisionMismatch";
    case errc::denominator_divisible_by_p: return "DenominatorDivisibleByP";
    case errc::zero_at_precision: return "ZeroAtPrecision";
    case errc::not_a_unit: return "NotAUnit";
    case errc::not_contractive: return "NotContractive";
    case errc::word_too_short: return "WordTooShort";
    case errc::value_out_of_range: return "ValueOutOfRange";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::alphabet_mismatch: return "AlphabetMismatch";
    case errc::coverage_violation: return "CoverageViolation";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::too_few_points: return "TooFewPoints";
    case errc::incomparable_length: return "IncomparableLength";
    case errc::empty_sample: return "EmptySample";
    case errc::parse_error: return "ParseError";
    case errc::validation_error: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace unconv
