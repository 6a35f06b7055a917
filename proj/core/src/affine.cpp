#include "unconv/affine.hpp"

#include <sstream>

namespace unconv {

namespace {
constexpr std::size_t kMaxWitnesses = 4;
}

AffineMap::AffineMap(PadicInt multiplier, PadicInt offset)
    : a_(std::move(multiplier)), b_(std::move(offset)) {
  if (a_.prime() != b_.prime())
    fail(errc::prime_mismatch, "multiplier and offset primes differ");
  if (a_.precision() != b_.precision())
    fail(errc::precision_mismatch, "multiplier and offset precisions differ");
  if (a_.valuation().exponent < 1)
    fail(errc::not_contractive,
         "multiplier " + a_.digit_string() + " has |a|_p = 1; need |a|_p <= 1/p");
}

PadicInt AffineMap::operator()(const PadicInt& x) const { return a_ * x + b_; }

PadicInt AffineMap::fixed_point() const {
  PadicInt one = PadicInt::one(prime(), precision());
  return b_ * (one - a_).unit_inverse();
}

std::string AffineMap::to_text() const {
  return "a=" + a_.digit_string() + "; b=" + b_.digit_string();
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return AffineMap(f.multiplier() * g.multiplier(),
                   f.multiplier() * g.offset() + f.offset());
}

std::string CertificateReport::to_text() const {
  std::ostringstream os;
  os << "analytic=";
  switch (analytic) {
    case Analytic::pass: os << "pass"; break;
    case Analytic::fail: os << "fail"; break;
    case Analytic::not_applicable: os << "n/a"; break;
  }
  os << " pairs=" << pairs_tested;
  if (worst_ratio_exponent) os << " worst_ratio_exp=" << *worst_ratio_exponent;
  os << " sampled=" << (sampled_ok ? "ok" : "FAIL");
  for (const auto& [x, y] : witnesses)
    os << " witness={" << x.digit_string() << " | " << y.digit_string() << "}";
  return os.str();
}

namespace {

// Shared sampling loop: ratio exponent val(f(x)-f(y)) - val(x-y) over random
// pairs, skipping pairs indistinguishable at precision.
void sample_pairs(const std::function<PadicInt(const PadicInt&)>& f, std::uint64_t prime,
                  int precision, std::size_t count, std::uint64_t seed, CertificateReport& out) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    PadicInt x = random_padic(rng, prime, precision);
    PadicInt y = random_padic(rng, prime, precision);
    Valuation dv = (x - y).valuation();
    if (dv.at_precision) continue;
    Valuation fv = (f(x) - f(y)).valuation();
    int ratio = fv.exponent - dv.exponent;
    ++out.pairs_tested;
    if (!out.worst_ratio_exponent || ratio < *out.worst_ratio_exponent)
      out.worst_ratio_exponent = ratio;
    if (ratio < 1) {
      out.sampled_ok = false;
      if (out.witnesses.size() < kMaxWitnesses) out.witnesses.emplace_back(x, y);
    }
  }
}

}  // namespace

CertificateReport certify_contraction(const AffineMap& f, std::size_t sample_pairs_count,
                                      std::uint64_t seed) {
  CertificateReport report;
  report.analytic = f.multiplier().valuation().exponent >= 1 ? CertificateReport::Analytic::pass
                                                             : CertificateReport::Analytic::fail;
  if (sample_pairs_count > 0) {
    sample_pairs([&f](const PadicInt& x) { return f(x); }, f.prime(), f.precision(),
                 sample_pairs_count, seed, report);
  }
  return report;
}

CertificateReport certify_multiplier(const PadicInt& multiplier) {
  CertificateReport report;
  report.analytic = multiplier.valuation().exponent >= 1 ? CertificateReport::Analytic::pass
                                                         : CertificateReport::Analytic::fail;
  return report;
}

CertificateReport certify_contraction(const std::function<PadicInt(const PadicInt&)>& f,
                                      std::uint64_t prime, int precision,
                                      std::size_t sample_pairs_count, std::uint64_t seed) {
  CertificateReport report;
  report.analytic = CertificateReport::Analytic::not_applicable;
  sample_pairs(f, prime, precision, sample_pairs_count, seed, report);
  return report;
}

ContractionSystem::ContractionSystem(std::vector<AffineMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) fail(errc::validation_error, "a system needs at least one map");
  for (const auto& m : maps_) {
    if (m.prime() != maps_.front().prime())
      fail(errc::prime_mismatch, "system maps must share one prime");
    if (m.precision() != maps_.front().precision())
      fail(errc::precision_mismatch, "system maps must share one precision");
  }
}

const AffineMap& ContractionSystem::map(std::size_t i) const {
  if (i < 1 || i > maps_.size())
    fail(errc::value_out_of_range,
         "map index " + std::to_string(i) + " outside [1, " + std::to_string(maps_.size()) + "]");
  return maps_[i - 1];
}

}  // namespace unconv
