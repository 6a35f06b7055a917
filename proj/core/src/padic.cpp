#include "unconv/padic.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace unconv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Inverse of a mod m for m < 2^32, gcd(a, m) = 1; extended Euclid.
u64 inv_mod_small(u64 a, u64 m) {
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(errc::not_a_unit, "no inverse modulo " + std::to_string(m));
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<u64>(t);
}

void check_parameters(u64 prime, int precision) {
  if (!is_prime(prime)) fail(errc::not_prime, std::to_string(prime) + " is not prime");
  if (prime >> 32)
    fail(errc::value_out_of_range, "prime must fit in 32 bits for digit arithmetic");
  if (precision < 1) fail(errc::value_out_of_range, "precision must be >= 1");
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : kSmallPrimes) {
    if (n % q == 0) return n == q;
  }
  if (n < 41 * 41) return true;
  for (u64 a : kSmallPrimes) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

std::string Valuation::norm_text() const {
  if (at_precision) return "<=" + std::to_string(prime) + "^-" + std::to_string(exponent);
  if (exponent == 0) return "1";
  return std::to_string(prime) + "^-" + std::to_string(exponent);
}

PadicInt::PadicInt(u64 prime, std::vector<std::uint32_t> digits)
    : prime_(prime), digits_(std::move(digits)) {}

void PadicInt::check_compatible(const PadicInt& y) const {
  if (prime_ != y.prime_)
    fail(errc::prime_mismatch,
         "operands live over p=" + std::to_string(prime_) + " and p=" + std::to_string(y.prime_));
  if (digits_.size() != y.digits_.size())
    fail(errc::precision_mismatch, "operand precisions " + std::to_string(digits_.size()) +
                                       " and " + std::to_string(y.digits_.size()) + " differ");
}

PadicInt PadicInt::zero(u64 prime, int precision) {
  check_parameters(prime, precision);
  return PadicInt(prime, std::vector<std::uint32_t>(static_cast<std::size_t>(precision), 0));
}

PadicInt PadicInt::one(u64 prime, int precision) {
  PadicInt r = zero(prime, precision);
  r.digits_[0] = 1;
  return r;
}

PadicInt PadicInt::from_digits(u64 prime, std::vector<std::uint32_t> digits) {
  if (digits.empty()) fail(errc::value_out_of_range, "digit sequence must be nonempty");
  check_parameters(prime, static_cast<int>(digits.size()));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= prime)
      fail(errc::digit_out_of_range, "digit " + std::to_string(digits[i]) + " at index " +
                                         std::to_string(i) + " is not in [0, " +
                                         std::to_string(prime - 1) + "]");
  }
  return PadicInt(prime, std::move(digits));
}

PadicInt PadicInt::from_integer(u64 prime, int precision, long long value) {
  check_parameters(prime, precision);
  unsigned long long mag =
      value < 0 ? 0ULL - static_cast<unsigned long long>(value) : static_cast<unsigned long long>(value);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(precision), 0);
  for (int i = 0; i < precision && mag; ++i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(mag % prime);
    mag /= prime;
  }
  PadicInt r(prime, std::move(digits));
  return value < 0 ? -r : r;
}

PadicInt PadicInt::from_rational(u64 prime, int precision, long long num, long long den) {
  check_parameters(prime, precision);
  unsigned long long dmag =
      den < 0 ? 0ULL - static_cast<unsigned long long>(den) : static_cast<unsigned long long>(den);
  if (dmag % prime == 0)
    fail(errc::denominator_divisible_by_p,
         "denominator " + std::to_string(den) + " is divisible by " + std::to_string(prime));
  PadicInt n = from_integer(prime, precision, num);
  PadicInt d = from_integer(prime, precision, den);
  return n * d.unit_inverse();
}

PadicInt PadicInt::parse_digits(u64 prime, std::string_view text) {
  std::vector<std::uint32_t> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r'))
      tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "bad digit token '" + std::string(tok) + "'");
    digits.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_digits(prime, std::move(digits));
}

bool PadicInt::is_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](std::uint32_t d) { return d == 0; });
}

Valuation PadicInt::valuation() const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 0) return {prime_, static_cast<int>(i), false};
  }
  return {prime_, precision(), true};
}

bool PadicInt::eq_mod(const PadicInt& other, int k) const {
  check_compatible(other);
  if (k < 0 || k > precision())
    fail(errc::value_out_of_range, "modulus exponent " + std::to_string(k) + " outside [0, K]");
  return std::equal(digits_.begin(), digits_.begin() + k, other.digits_.begin());
}

PadicInt::Canonical PadicInt::canonical_decompose() const {
  Valuation v = valuation();
  if (v.at_precision)
    fail(errc::zero_at_precision, "zero at precision " + std::to_string(precision()) +
                                      " has no canonical decomposition");
  Canonical c;
  c.gamma = v.exponent;
  c.unit_digits.assign(digits_.begin() + v.exponent, digits_.end());
  return c;
}

PadicInt PadicInt::operator+(const PadicInt& y) const {
  check_compatible(y);
  PadicInt r(*this);
  u64 carry = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    u64 t = u64(r.digits_[i]) + y.digits_[i] + carry;
    carry = t >= prime_ ? 1 : 0;
    r.digits_[i] = static_cast<std::uint32_t>(t - carry * prime_);
  }
  return r;
}

PadicInt PadicInt::operator-(const PadicInt& y) const {
  check_compatible(y);
  PadicInt r(*this);
  long long borrow = 0;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    long long t = static_cast<long long>(r.digits_[i]) - y.digits_[i] - borrow;
    borrow = t < 0 ? 1 : 0;
    r.digits_[i] = static_cast<std::uint32_t>(t + borrow * static_cast<long long>(prime_));
  }
  return r;
}

PadicInt PadicInt::operator*(const PadicInt& y) const {
  check_compatible(y);
  const std::size_t k = digits_.size();
  std::vector<u128> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (digits_[i] == 0) continue;
    for (std::size_t j = 0; j + i < k; ++j) {
      acc[i + j] += u64(digits_[i]) * y.digits_[j];
    }
  }
  PadicInt r(*this);
  u128 carry = 0;
  for (std::size_t i = 0; i < k; ++i) {
    u128 t = acc[i] + carry;
    r.digits_[i] = static_cast<std::uint32_t>(t % prime_);
    carry = t / prime_;
  }
  return r;
}

PadicInt PadicInt::operator-() const { return zero(prime_, precision()) - *this; }

PadicInt PadicInt::unit_inverse() const {
  if (digits_[0] == 0)
    fail(errc::not_a_unit, "inverse requires |x|_p = 1, got leading digit 0");
  const int k = precision();
  PadicInt z = from_integer(prime_, k, static_cast<long long>(inv_mod_small(digits_[0], prime_)));
  PadicInt two = from_integer(prime_, k, 2);
  // Newton: z <- z(2 - xz) doubles the number of correct digits per step.
  for (int correct = 1; correct < k; correct *= 2) {
    z = z * (two - *this * z);
  }
  return z;
}

PadicInt PadicInt::truncated(int k) const {
  if (k < 1 || k > precision())
    fail(errc::value_out_of_range, "truncation length " + std::to_string(k) + " outside [1, K]");
  return PadicInt(prime_, std::vector<std::uint32_t>(digits_.begin(), digits_.begin() + k));
}

std::string PadicInt::digit_string() const {
  std::string s;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(digits_[i]);
  }
  return s;
}

bool PadicInt::operator==(const PadicInt& y) const {
  check_compatible(y);
  return digits_ == y.digits_;
}

std::ostream& operator<<(std::ostream& os, const PadicInt& x) {
  return os << x.digit_string() << " (p=" << x.prime() << " K=" << x.precision() << ")";
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.norm_text(); }

bool lex_less(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision())
    fail(errc::validation_error, "lexicographic order needs matching prime and precision");
  return std::lexicographical_compare(a.digits().begin(), a.digits().end(), b.digits().begin(),
                                      b.digits().end());
}

PadicInt random_padic(std::mt19937_64& rng, u64 prime, int precision) {
  std::uniform_int_distribution<u64> digit(0, prime - 1);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(precision));
  for (auto& d : digits) d = static_cast<std::uint32_t>(digit(rng));
  return PadicInt::from_digits(prime, std::move(digits));
}

}  // namespace unconv
