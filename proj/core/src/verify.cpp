#include "unconv/verify.hpp"

#include <algorithm>
#include <set>

#include "unconv/gallery.hpp"

namespace unconv {

namespace {

SymbolWord random_word(std::mt19937_64& rng, std::uint32_t alphabet, std::size_t prefix_len,
                       std::size_t tail_len) {
  std::uniform_int_distribution<std::uint32_t> sym(1, alphabet);
  std::vector<std::uint32_t> prefix(prefix_len), tail(tail_len);
  for (auto& s : prefix) s = sym(rng);
  for (auto& s : tail) s = sym(rng);
  return SymbolWord(std::move(prefix), std::move(tail), alphabet);
}

MetricReport certificates_report(const RunConfig& cfg) {
  MetricReport r;
  r.property = "contraction-certificates";
  r.parameters = "N=" + std::to_string(cfg.system.size());
  int worst = cfg.precision;
  for (std::size_t i = 1; i <= cfg.system.size(); ++i) {
    CertificateReport c = certify_contraction(cfg.system.map(i));
    worst = std::min(worst, cfg.system.map(i).multiplier().valuation().exponent);
    if (!c.passed()) {
      r.verdict = Verdict::fail;
      r.witnesses.push_back("map " + std::to_string(i));
    }
  }
  r.constant_exponent = worst;  // smallest multiplier valuation
  return r;
}

MetricReport coverage_report(const RunConfig& cfg) {
  MetricReport r;
  r.property = "family-coverage";
  r.parameters = "M=" + std::to_string(cfg.family.rows_m()) +
                 " L=" + std::to_string(cfg.family.cols_l()) +
                 " N=" + std::to_string(cfg.family.alphabet());
  r.verdict = validate_coverage(cfg.family) ? Verdict::pass : Verdict::fail;
  return r;
}

// val(F(x) - F(y)) >= min(val(x - y) + n, K) over random words and points.
MetricReport lipschitz_report(const RunConfig& cfg) {
  MetricReport r;
  r.property = "composition-lipschitz";
  r.parameters = "samples=" + std::to_string(cfg.verify_samples) +
                 " seed=" + std::to_string(cfg.seed);
  std::mt19937_64 rng(cfg.seed ^ 0x1111);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::optional<int> worst_slack;
  for (std::size_t s = 0; s < cfg.verify_samples; ++s) {
    const std::size_t n = len(rng);
    SymbolWord alpha = random_word(rng, cfg.family.alphabet(), n, 0);
    PadicInt x = random_padic(rng, cfg.prime, cfg.precision);
    PadicInt y = random_padic(rng, cfg.prime, cfg.precision);
    Valuation dv = (x - y).valuation();
    if (dv.at_precision) continue;
    PadicInt fx = apply_unconventional(cfg.system, cfg.family, alpha, n, x);
    PadicInt fy = apply_unconventional(cfg.system, cfg.family, alpha, n, y);
    const int need = std::min(dv.exponent + static_cast<int>(n), cfg.precision);
    const int got = (fx - fy).valuation().exponent;
    const int slack = got - need;
    if (!worst_slack || slack < *worst_slack) worst_slack = slack;
    if (slack < 0) {
      r.verdict = Verdict::fail;
      if (r.witnesses.size() < 4)
        r.witnesses.push_back("word=" + alpha.str() + " x=" + x.digit_string() +
                              " y=" + y.digit_string());
    }
  }
  r.constant_exponent = worst_slack;
  return r;
}

// Depth-n and depth-m values agree mod p^m for m < n.
MetricReport cauchy_report(const RunConfig& cfg) {
  MetricReport r;
  r.property = "depth-cauchy-rate";
  const int max_depth = std::min(8, cfg.precision);
  r.parameters = "words=" + std::to_string(cfg.verify_words) +
                 " depths<=" + std::to_string(max_depth) + " seed=" + std::to_string(cfg.seed);
  std::mt19937_64 rng(cfg.seed ^ 0x2222);
  for (std::size_t w = 0; w < cfg.verify_words; ++w) {
    SymbolWord alpha = random_word(rng, cfg.family.alphabet(), 8, 1 + (w % 2));
    std::vector<PadicInt> values;
    for (int n = 1; n <= max_depth; ++n)
      values.push_back(lambda0_point(cfg.system, cfg.family, alpha, static_cast<std::size_t>(n)));
    for (int n = 2; n <= max_depth; ++n) {
      for (int m = 1; m < n; ++m) {
        if (!values[static_cast<std::size_t>(n - 1)].eq_mod(values[static_cast<std::size_t>(m - 1)], m)) {
          r.verdict = Verdict::fail;
          if (r.witnesses.size() < 4)
            r.witnesses.push_back("word=" + alpha.str() + " n=" + std::to_string(n) +
                                  " m=" + std::to_string(m));
        }
      }
    }
  }
  return r;
}

// Extension value against the limit point of the concatenated word.
MetricReport extension_report(const RunConfig& cfg) {
  MetricReport r;
  r.property = "extension-identity";
  r.parameters = "tuples=" + std::to_string(cfg.verify_words) +
                 " seed=" + std::to_string(cfg.seed);
  std::mt19937_64 rng(cfg.seed ^ 0x3333);
  std::uniform_int_distribution<std::size_t> pick_n(1, 4), pick_m(1, 6), pick_tail(1, 2);
  for (std::size_t t = 0; t < cfg.verify_words; ++t) {
    const std::size_t n = pick_n(rng);
    const std::size_t m = pick_m(rng);
    SymbolWord alpha = random_word(rng, cfg.family.alphabet(), 4, 0);
    SymbolWord beta = random_word(rng, cfg.family.alphabet(), 2, pick_tail(rng));
    PadicInt lhs = f_tilde(cfg.system, cfg.family, alpha, n, beta, m);
    SymbolWord joined = concat_words(alpha, n, beta);
    PadicInt rhs =
        limit_point(cfg.system, cfg.family, joined, static_cast<int>(n + m)).value;
    const int k = std::min(static_cast<int>(n + m), cfg.precision);
    if (!lhs.eq_mod(rhs, k)) {
      r.verdict = Verdict::fail;
      if (r.witnesses.size() < 4)
        r.witnesses.push_back("alpha=" + alpha.str() + " n=" + std::to_string(n) +
                              " beta=" + beta.str() + " m=" + std::to_string(m));
    }
  }
  return r;
}

void metric_reports(const RunConfig& cfg, const LimitSetSample& sample,
                    std::vector<MetricReport>& out) {
  const auto& pts = sample.points;
  if (pts.size() < 2) {
    MetricReport r;
    r.property = "metric-scans";
    r.verdict = Verdict::not_applicable;
    r.note = "fewer than two limit points";
    out.push_back(std::move(r));
    return;
  }

  const int max_r = sample.depth - 1;
  MetricReport annulus;
  annulus.property = "uniform-perfectness-annulus";
  annulus.parameters = "all centers, radii 1.." + std::to_string(max_r) + ", c=1/p";
  MetricReport separation;
  separation.property = "uniform-disconnectedness-separation";
  separation.parameters = "all centers, radii 1.." + std::to_string(max_r);
  MetricReport doubling;
  doubling.property = "doubling-cover";
  doubling.parameters = separation.parameters;
  std::size_t doubling_worst = 1;

  for (const auto& center : pts) {
    for (int k = 1; k <= max_r; ++k) {
      MetricReport a = perfect_annulus(pts, center, k, 1);
      if (!a.passed()) {
        annulus.verdict = Verdict::fail;
        if (annulus.witnesses.size() < 4)
          annulus.witnesses.push_back("x0=" + center.digit_string() + " r_exp=" + std::to_string(k));
      }
      MetricReport d = disconnect_separation(pts, center, k);
      if (!d.passed()) {
        separation.verdict = Verdict::fail;
        if (separation.witnesses.size() < 4)
          separation.witnesses.push_back("a=" + center.digit_string() + " r_exp=" + std::to_string(k));
      }
      MetricReport c = doubling_cover(pts, center, k);
      doubling_worst = std::max(doubling_worst,
                                static_cast<std::size_t>(c.constant_exponent.value_or(1)));
      if (!c.passed()) {
        doubling.verdict = Verdict::fail;
        if (doubling.witnesses.size() < 4)
          doubling.witnesses.push_back("a=" + center.digit_string() + " r_exp=" + std::to_string(k));
      }
    }
  }
  doubling.constant_exponent = static_cast<int>(doubling_worst);
  doubling.note = "worst cover size " + std::to_string(doubling_worst) + " (bound p = " +
                  std::to_string(cfg.prime) + ")";
  out.push_back(std::move(annulus));
  out.push_back(std::move(separation));
  out.push_back(std::move(doubling));

  const int coarse_depth = std::max(1, sample.depth / 2);
  LimitSetSample coarse = enumerate_lambda0(cfg.system, cfg.family, coarse_depth, cfg.budget);
  out.push_back(isolation_scan(coarse, sample, 0));
}

void gallery_reports(const RunConfig& cfg, const XiMatrix& xi, const LimitSetSample& sample,
                     std::vector<MetricReport>& out) {
  const int tag = xi.case_tag().value_or(0);
  PxSystem px{cfg.prime, cfg.precision, cfg.system};

  // Closed form vs composed fixed point vs iteration, words up to length 4.
  {
    MetricReport r;
    r.property = "closed-form-equivalence";
    r.parameters = "words of length <= 4";
    IndexFamily plain = plain_family(2);
    std::vector<std::uint32_t> word;
    for (std::size_t n = 1; n <= 4; ++n) {
      word.assign(n, 1);
      while (true) {
        SymbolWord alpha(word, 2);
        PadicInt closed = closed_form_fixed_point(px, alpha, n);
        AffineMap composed = component_map(cfg.system, plain.entry(1, 1), alpha, n);
        PadicInt direct = composed.fixed_point();
        PadicInt iterated =
            banach_fixed_point([&](const PadicInt& v) { return composed(v); },
                               PadicInt::zero(cfg.prime, cfg.precision));
        if (!(closed == direct) || !(closed == iterated)) {
          r.verdict = Verdict::fail;
          if (r.witnesses.size() < 4) r.witnesses.push_back("word=" + alpha.str());
        }
        std::size_t pos = n;
        while (pos > 0 && word[pos - 1] == 2) word[--pos] = 1;
        if (pos == 0) break;
        ++word[pos - 1];
      }
    }
    out.push_back(std::move(r));
  }

  // Image identity: the family enumeration equals the polynomial image of
  // the plain enumeration, as residue sets mod p^depth.
  if (tag >= 1) {
    MetricReport r;
    r.property = "case-image-identity";
    r.parameters = "case=" + std::to_string(tag) + " depth=" + std::to_string(sample.depth);
    LimitSetSample base =
        enumerate_lambda0(cfg.system, plain_family(2), sample.depth, cfg.budget);
    std::set<std::vector<std::uint32_t>> lhs, rhs;
    for (const auto& pt : sample.points)
      lhs.insert(pt.truncated(sample.depth).digits());
    for (const auto& pt : base.points)
      rhs.insert(case_image(tag, pt).truncated(sample.depth).digits());
    if (lhs != rhs) {
      r.verdict = Verdict::fail;
      r.note = "family residues " + std::to_string(lhs.size()) + " vs image residues " +
               std::to_string(rhs.size());
    }
    out.push_back(std::move(r));
  }

  // Membership and flip symmetry of the base set.
  {
    MetricReport r;
    r.property = "membership-flip-symmetry";
    r.parameters = "samples=" + std::to_string(cfg.verify_samples) +
                   " seed=" + std::to_string(cfg.seed);
    std::mt19937_64 rng(cfg.seed ^ 0x4444);
    PadicInt one = PadicInt::one(cfg.prime, cfg.precision);
    for (std::size_t s = 0; s < cfg.verify_samples; ++s) {
      PadicInt x = random_padic(rng, cfg.prime, cfg.precision);
      if (lambda_member(x) != lambda_member(one - x)) {
        r.verdict = Verdict::fail;
        if (r.witnesses.size() < 4) r.witnesses.push_back(x.digit_string());
      }
    }
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<MetricReport> run_verification(const RunConfig& cfg) {
  std::vector<MetricReport> reports;
  reports.push_back(certificates_report(cfg));
  reports.push_back(coverage_report(cfg));
  if (cfg.verify_lipschitz) reports.push_back(lipschitz_report(cfg));
  if (cfg.verify_cauchy) reports.push_back(cauchy_report(cfg));
  if (cfg.verify_extension) reports.push_back(extension_report(cfg));

  std::optional<LimitSetSample> sample;
  if (cfg.verify_metric || cfg.verify_gallery)
    sample = enumerate_lambda0(cfg.system, cfg.family, cfg.depth, cfg.budget);
  if (cfg.verify_metric) metric_reports(cfg, *sample, reports);
  if (cfg.verify_gallery) {
    if (auto xi = match_px_parity(cfg.system, cfg.family))
      gallery_reports(cfg, *xi, *sample, reports);
  }
  return reports;
}

}  // namespace unconv
