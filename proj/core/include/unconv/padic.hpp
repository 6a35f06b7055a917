#pragma once

// Fixed-precision p-adic integer arithmetic. A value is the residue
// d_0 + d_1*p + ... + d_{K-1}*p^{K-1} (mod p^K), stored as its digit vector.
// Every operation is exact residue arithmetic mod p^K: digit truncation is
// the only approximation in this library, and norms stay symbolic powers of
// p, never floats.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "unconv/errors.hpp"

namespace unconv {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Symbolic norm p^(-exponent). exponent == precision flags a value that is
// zero at this precision (true valuation >= precision); keeping the flag
// explicit makes comparisons total without pretending to know digits that
// were never computed.
struct Valuation {
  std::uint64_t prime = 0;
  int exponent = 0;
  bool at_precision = false;

  std::string norm_text() const;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

class PadicInt {
 public:
  static PadicInt zero(std::uint64_t prime, int precision);
  static PadicInt one(std::uint64_t prime, int precision);

  // Little-endian digits, each in [0, p). Precision = digits.size().
  static PadicInt from_digits(std::uint64_t prime, std::vector<std::uint32_t> digits);

  // Residue of an integer mod p^K; negatives map to their residue class.
  static PadicInt from_integer(std::uint64_t prime, int precision, long long value);

  // num * den^(-1) mod p^K. Requires gcd(den, p) = 1.
  static PadicInt from_rational(std::uint64_t prime, int precision, long long num,
                                long long den);

  // Parses "0,1,2,0" (little-endian, comma separated).
  static PadicInt parse_digits(std::uint64_t prime, std::string_view text);

  std::uint64_t prime() const { return prime_; }
  int precision() const { return static_cast<int>(digits_.size()); }
  const std::vector<std::uint32_t>& digits() const { return digits_; }
  std::uint32_t digit(int i) const { return digits_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;  // zero at this precision
  Valuation valuation() const;

  // True iff the first k digits agree, i.e. |x - y|_p <= p^(-k). k in [0, K].
  bool eq_mod(const PadicInt& other, int k) const;

  // x = p^gamma * (unit digits), unit_digits[0] != 0. Throws on zero input.
  struct Canonical {
    int gamma = 0;
    std::vector<std::uint32_t> unit_digits;
  };
  Canonical canonical_decompose() const;

  PadicInt operator+(const PadicInt& y) const;
  PadicInt operator-(const PadicInt& y) const;
  PadicInt operator*(const PadicInt& y) const;
  PadicInt operator-() const;

  // Multiplicative inverse; requires |x|_p = 1 (nonzero first digit).
  PadicInt unit_inverse() const;

  // First k digits as a standalone value of precision k.
  PadicInt truncated(int k) const;

  std::string digit_string() const;

  // Values with mismatched prime or precision are not comparable; == throws
  // instead of silently answering false.
  bool operator==(const PadicInt& y) const;
  bool operator!=(const PadicInt& y) const { return !(*this == y); }

 private:
  PadicInt(std::uint64_t prime, std::vector<std::uint32_t> digits);
  void check_compatible(const PadicInt& y) const;

  std::uint64_t prime_ = 2;
  std::vector<std::uint32_t> digits_;
};

std::ostream& operator<<(std::ostream& os, const PadicInt& x);
std::ostream& operator<<(std::ostream& os, const Valuation& v);

// Digit-lexicographic order (little-endian); the canonical sort for exports.
bool lex_less(const PadicInt& a, const PadicInt& b);

// Uniform over residues mod p^K.
PadicInt random_padic(std::mt19937_64& rng, std::uint64_t prime, int precision);

inline Valuation valuation_norm(const PadicInt& x) { return x.valuation(); }
inline bool eq_mod(const PadicInt& x, const PadicInt& y, int k) { return x.eq_mod(y, k); }

}  // namespace unconv
