#pragma once

// Ultrametric geometry of finite point samples: balls, annuli, separation,
// doubling covers, the symbolic Cantor metric on words, and a quasi-symmetry
// audit of the word -> limit-point coding. All radii are powers of p (in an
// ultrametric every ball is of this form), so every verdict is an exact
// integer comparison of exponents.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unconv/limit_set.hpp"

namespace unconv {

struct BallSpec {
  PadicInt center;
  int radius_exponent = 0;  // radius p^(-k)
  bool closed = true;       // closed: val(x - c) >= k; open: val(x - c) > k

  bool contains(const PadicInt& x) const;
};

enum class Verdict { pass, fail, not_applicable };
const char* verdict_name(Verdict v);

struct MetricReport {
  std::string property;
  std::string parameters;
  Verdict verdict = Verdict::pass;
  std::optional<int> constant_exponent;  // extremal exponent observed
  std::vector<std::string> witnesses;
  std::string note;

  bool passed() const { return verdict != Verdict::fail; }
  std::string to_text() const;
};

// Valuation of x - y; the distance is p^(-exponent), symbolically.
Valuation pdist(const PadicInt& x, const PadicInt& y);

// Largest pairwise distance = smallest pairwise difference-valuation.
// Requires at least two points distinguishable at precision.
Valuation diameter(std::span<const PadicInt> points);

// Searches the annulus { y : r/p^c_exp <= |y - x0|_p <= r }, r = p^(-r_exp),
// for a sample point; failure reports the empty annulus.
MetricReport perfect_annulus(std::span<const PadicInt> sample, const PadicInt& x0, int r_exp,
                             int c_exp);

// A = sample intersect B_{p^(-r_exp)}(a). Reports the exact separation
// valuation between A and its complement; passes iff the separation distance
// strictly exceeds the ball radius.
MetricReport disconnect_separation(std::span<const PadicInt> sample, const PadicInt& a,
                                   int r_exp);

// Partitions sample intersect B_{p^(-r_exp)}(a) by the digit at position
// r_exp into subballs of radius p^(-r_exp-1) <= r/2; at most p are ever
// needed.
MetricReport doubling_cover(std::span<const PadicInt> sample, const PadicInt& a, int r_exp);

struct Fraction {
  long long num = 1;
  long long den = 2;
};

// Symbolic Cantor distance a^L between words, L = longest common prefix.
struct SymbolDistance {
  Fraction base;                  // the metric parameter a
  bool equal = false;             // provably identical sequences (L = infinity)
  bool exact = true;              // false when only "L >= common_prefix" is certifiable
  std::size_t common_prefix = 0;  // L

  std::string text() const;
};

SymbolDistance symbol_dist(const SymbolWord& x, const SymbolWord& y, Fraction a);

// Modulus eta(t) = t^s for the quasi-symmetry audit. snowflake selects
// s = log p / log 2, under which the audit inequality becomes an exact
// comparison of integer exponents.
struct QsModulus {
  bool snowflake = true;
  long long num = 0, den = 0;

  static QsModulus snowflake_modulus() { return QsModulus{true, 0, 0}; }
  static QsModulus power(long long num, long long den);
};

// Checks, for every sampled triple (x, y, z) of words, that
//   d_p(pi x, pi y) <= eta(t) * d_p(pi x, pi z),  t = d_a(x,y) / d_a(x,z)
// with a = 1/2, where pi sends a word to its limit-point value. Degenerate
// triples (x = z, or image distances unresolvable at precision) are skipped
// and counted.
MetricReport quasi_symmetry_audit(std::span<const std::array<SymbolWord, 3>> triples,
                                  const ContractionSystem& system, const IndexFamily& family,
                                  QsModulus modulus);

// For each coarse point, requires a fine-sample point that is distinct mod
// p^fine.depth yet within p^-(coarse.depth - margin); an isolated point fails
// the scan.
MetricReport isolation_scan(const LimitSetSample& coarse, const LimitSetSample& fine,
                            int margin = 0);

}  // namespace unconv
