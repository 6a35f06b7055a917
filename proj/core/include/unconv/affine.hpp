#pragma once

// Affine contractions x -> a*x + b on the p-adic integers. The multiplier
// must satisfy |a|_p <= 1/p; construction rejects anything weaker, so every
// AffineMap in the program carries its contraction certificate.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unconv/padic.hpp"

namespace unconv {

class AffineMap {
 public:
  AffineMap(PadicInt multiplier, PadicInt offset);

  const PadicInt& multiplier() const { return a_; }
  const PadicInt& offset() const { return b_; }
  std::uint64_t prime() const { return a_.prime(); }
  int precision() const { return a_.precision(); }

  PadicInt operator()(const PadicInt& x) const;

  // b * (1 - a)^(-1); 1 - a is a unit because |a|_p <= 1/p.
  PadicInt fixed_point() const;

  std::string to_text() const;  // "a=<digits>; b=<digits>"

 private:
  PadicInt a_, b_;
};

// compose(f, g)(x) = f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

// Iterates f until two successive values agree on every digit. A contraction
// stabilizes within `precision` steps; anything slower throws.
template <class F>
PadicInt banach_fixed_point(F&& f, PadicInt start) {
  const int limit = start.precision() + 1;
  for (int i = 0; i < limit; ++i) {
    PadicInt next = f(start);
    if (next == start) return start;
    start = std::move(next);
  }
  fail(errc::validation_error, "iteration did not stabilize within the precision bound");
}

// Outcome of a contraction check. The analytic verdict covers all pairs at
// once (valuation of the multiplier); sampling records the worst observed
// ratio exponent val(f(x)-f(y)) - val(x-y), which must stay >= 1.
struct CertificateReport {
  enum class Analytic { pass, fail, not_applicable };

  Analytic analytic = Analytic::not_applicable;
  std::size_t pairs_tested = 0;
  std::optional<int> worst_ratio_exponent;
  bool sampled_ok = true;
  std::vector<std::pair<PadicInt, PadicInt>> witnesses;  // failing pairs, capped

  bool passed() const { return analytic != Analytic::fail && sampled_ok; }
  std::string to_text() const;
};

// Analytic certificate of an already-constructed map, optionally confirmed on
// sampled pairs.
CertificateReport certify_contraction(const AffineMap& f, std::size_t sample_pairs = 0,
                                      std::uint64_t seed = 0);

// Analytic certificate of a candidate multiplier that may not be admissible.
CertificateReport certify_multiplier(const PadicInt& multiplier);

// Sampled certificate for an arbitrary self-map of Z_p.
CertificateReport certify_contraction(const std::function<PadicInt(const PadicInt&)>& f,
                                      std::uint64_t prime, int precision,
                                      std::size_t sample_pairs, std::uint64_t seed);

class ContractionSystem {
 public:
  explicit ContractionSystem(std::vector<AffineMap> maps);

  std::size_t size() const { return maps_.size(); }
  const AffineMap& map(std::size_t i) const;  // 1-based
  const std::vector<AffineMap>& maps() const { return maps_; }
  std::uint64_t prime() const { return maps_.front().prime(); }
  int precision() const { return maps_.front().precision(); }

 private:
  std::vector<AffineMap> maps_;
};

}  // namespace unconv
