// Acceptance suite: end-to-end checks at the scales the project commits to,
// one pass/fail line per criterion. All comparisons are exact modular
// arithmetic; there are no tolerances anywhere. Exercises the bundled case
// configs (argv[1] points at docs/examples).

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unconv/config.hpp"
#include "unconv/gallery.hpp"
#include "unconv/metric.hpp"
#include "unconv/verify.hpp"

using namespace unconv;

namespace {

struct Criterion {
  explicit Criterion(std::string what) : name(std::move(what)) {}

  std::string name;
  bool pass = true;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string note;

  void count(bool ok) {
    ++checks;
    if (!ok) {
      ++violations;
      pass = false;
    }
  }
};

std::vector<SymbolWord> words_of_length(std::size_t n) {
  std::vector<SymbolWord> out;
  std::vector<std::uint32_t> w(n, 1);
  while (true) {
    out.emplace_back(w, 2);
    std::size_t pos = n;
    while (pos > 0 && w[pos - 1] == 2) w[--pos] = 1;
    if (pos == 0) break;
    ++w[pos - 1];
  }
  return out;
}

SymbolWord random_word(std::mt19937_64& rng, std::size_t prefix_len, std::size_t tail_len) {
  std::vector<std::uint32_t> prefix(prefix_len), tail(tail_len);
  for (auto& s : prefix) s = 1 + static_cast<std::uint32_t>(rng() % 2);
  for (auto& s : tail) s = 1 + static_cast<std::uint32_t>(rng() % 2);
  return SymbolWord(std::move(prefix), std::move(tail), 2);
}

// ---- criteria -------------------------------------------------------------

Criterion c1_closed_form_equivalence() {
  Criterion c{"closed form = composed fixed point = iteration (p in {2,3,5}, K=12, |w| <= 6)"};
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    PxSystem px = make_px_system(p, 12);
    IndexFamily plain = plain_family(2);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& w : words_of_length(n)) {
        PadicInt closed = closed_form_fixed_point(px, w, n);
        AffineMap composed = component_map(px.system, plain.entry(1, 1), w, n);
        PadicInt direct = composed.fixed_point();
        PadicInt iterated = banach_fixed_point(
            [&](const PadicInt& x) { return composed(x); }, PadicInt::zero(p, 12));
        c.count(closed == direct && closed == iterated);
      }
    }
  }
  return c;
}

Criterion c2_lipschitz(const std::vector<RunConfig>& cases) {
  Criterion c{"sum-of-products maps gain one valuation per composed symbol (10^3 per case)"};
  for (const RunConfig& cfg : cases) {
    std::mt19937_64 rng(0xacc2 + cfg.seed);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 1 + rng() % 8;
      SymbolWord alpha = random_word(rng, n, 0);
      PadicInt x = random_padic(rng, cfg.prime, cfg.precision);
      PadicInt y = random_padic(rng, cfg.prime, cfg.precision);
      const int dv = (x - y).valuation().exponent;
      const int need = std::min(dv + static_cast<int>(n), cfg.precision);
      PadicInt fx = apply_unconventional(cfg.system, cfg.family, alpha, n, x);
      PadicInt fy = apply_unconventional(cfg.system, cfg.family, alpha, n, y);
      c.count((fx - fy).valuation().exponent >= need);
    }
  }
  return c;
}

Criterion c3_cauchy_rate(const std::vector<RunConfig>& cases) {
  Criterion c{"depth values are Cauchy at rate p^-m (100 words, 1 <= m < n <= 8)"};
  for (const RunConfig& cfg : cases) {
    std::mt19937_64 rng(0xacc3 + cfg.seed);
    for (int w = 0; w < 25; ++w) {
      SymbolWord alpha = random_word(rng, 8, 1 + (w % 2));
      std::vector<PadicInt> value;
      for (int n = 1; n <= 8; ++n)
        value.push_back(lambda0_point(cfg.system, cfg.family, alpha, static_cast<std::size_t>(n)));
      for (int n = 2; n <= 8; ++n) {
        for (int m = 1; m < n; ++m) {
          c.count(value[static_cast<std::size_t>(n - 1)].eq_mod(
              value[static_cast<std::size_t>(m - 1)], m));
        }
      }
    }
  }
  return c;
}

Criterion c4_extension_identity(const std::vector<RunConfig>& cases) {
  Criterion c{"extension value equals the concatenated limit point (100 tuples per case)"};
  for (const RunConfig& cfg : cases) {
    std::mt19937_64 rng(0xacc4 + cfg.seed);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng() % 4;
      const std::size_t m = 1 + rng() % 6;
      SymbolWord alpha = random_word(rng, 4, 0);
      SymbolWord beta = random_word(rng, 1 + rng() % 2, 1 + rng() % 2);
      PadicInt lhs = f_tilde(cfg.system, cfg.family, alpha, n, beta, m);
      PadicInt rhs = limit_point(cfg.system, cfg.family, concat_words(alpha, n, beta),
                                 static_cast<int>(n + m))
                         .value;
      c.count(lhs.eq_mod(rhs, std::min(static_cast<int>(n + m), cfg.precision)));
    }
  }
  return c;
}

Criterion c5_digit_characterization(const LimitSetSample& base8) {
  Criterion c{"depth-8 base sample matches the digit pattern in both directions (p=3)"};
  std::set<std::vector<std::uint32_t>> residues;
  for (const auto& pt : base8.points) {
    c.count(lambda_member(pt));
    residues.insert(pt.truncated(8).digits());
  }
  // Every admissible 8-digit pattern with gamma <= 3 must be hit mod 3^8.
  for (std::size_t gamma = 0; gamma <= 3; ++gamma) {
    const std::size_t free_digits = 7 - gamma;
    for (std::size_t bits = 0; bits < (1ULL << free_digits); ++bits) {
      std::vector<std::uint32_t> d(8, 0);
      d[gamma] = 1;
      for (std::size_t j = 0; j < free_digits; ++j)
        d[gamma + 1 + j] = (bits >> j & 1) ? 2 : 0;
      c.count(residues.count(d) == 1);
    }
  }
  c.note = std::to_string(base8.points.size()) + " points, 240 patterns";
  return c;
}

Criterion c6_uniform_perfectness(const LimitSetSample& base8) {
  Criterion c{"annulus r/p <= |x - y| <= r meets the sample (all centers, 1 <= k <= 7)"};
  for (const auto& x0 : base8.points) {
    for (int k = 1; k <= 7; ++k) {
      c.count(perfect_annulus(base8.points, x0, k, 1).verdict == Verdict::pass);
    }
  }
  return c;
}

Criterion c7_separation_and_doubling(const LimitSetSample& base8) {
  Criterion c{"ball separation strictly beats the radius; covers use <= p subballs"};
  for (const auto& a : base8.points) {
    for (int k = 1; k <= 7; ++k) {
      MetricReport sep = disconnect_separation(base8.points, a, k);
      bool sep_ok = sep.verdict == Verdict::pass &&
                    (!sep.constant_exponent || *sep.constant_exponent < k);
      MetricReport cov = doubling_cover(base8.points, a, k);
      bool cov_ok = cov.verdict == Verdict::pass && *cov.constant_exponent <= 3;
      c.count(sep_ok);
      c.count(cov_ok);
    }
  }
  return c;
}

Criterion c8_image_identities(const std::vector<RunConfig>& cases,
                              const LimitSetSample& base6) {
  Criterion c{"family enumeration equals the polynomial image of the base set (depth 6)"};
  for (std::size_t idx = 0; idx < cases.size(); ++idx) {
    const RunConfig& cfg = cases[idx];
    LimitSetSample fam = enumerate_lambda0(cfg.system, cfg.family, 6, cfg.budget);
    std::set<std::vector<std::uint32_t>> lhs, rhs;
    for (const auto& pt : fam.points) lhs.insert(pt.truncated(6).digits());
    for (const auto& pt : base6.points)
      rhs.insert(case_image(static_cast<int>(idx) + 1, pt).truncated(6).digits());
    c.count(lhs == rhs);
  }
  return c;
}

Criterion c9_coding_and_quasi_symmetry(const RunConfig& case4) {
  Criterion c{"difference valuation equals the common prefix; snowflake audit passes (case 4)"};
  PxSystem px{case4.prime, case4.precision, case4.system};

  // Coding identity over all equal-length pairs up to depth 6.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<SymbolWord> words = words_of_length(n);
    std::vector<PadicInt> pts;
    pts.reserve(words.size());
    for (const auto& w : words) pts.push_back(closed_form_fixed_point(px, w, n));
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        SymbolDistance L = symbol_dist(words[i], words[j], Fraction{1, 2});
        Valuation v = pdist(pts[i], pts[j]);
        c.count(!L.equal && !v.at_precision &&
                v.exponent == static_cast<int>(L.common_prefix));
      }
    }
  }

  // Exhaustive depth-6 triples, chunked by the first coordinate to keep the
  // triple buffer small.
  std::vector<SymbolWord> words = words_of_length(6);
  int worst_margin = 1 << 20;
  for (const auto& x : words) {
    std::vector<std::array<SymbolWord, 3>> triples;
    triples.reserve(words.size() * words.size());
    for (const auto& y : words) {
      for (const auto& z : words) triples.push_back({x, y, z});
    }
    MetricReport r = quasi_symmetry_audit(triples, case4.system, case4.family,
                                          QsModulus::snowflake_modulus());
    c.count(r.verdict == Verdict::pass);
    if (r.constant_exponent) worst_margin = std::min(worst_margin, *r.constant_exponent);
  }
  c.note = "worst snowflake margin " + std::to_string(worst_margin);
  return c;
}

Criterion c10_symmetry_and_flip(const RunConfig& case4) {
  Criterion c{"membership is symmetric under x -> 1-x; flips mirror closed forms"};
  PxSystem px{case4.prime, case4.precision, case4.system};
  PadicInt one = PadicInt::one(case4.prime, case4.precision);

  std::mt19937_64 rng(0xacc10);
  for (int t = 0; t < 1000; ++t) {
    PadicInt x = random_padic(rng, case4.prime, case4.precision);
    if (t % 2 == 0) {
      // Half the strings follow the admissible pattern, half are uniform.
      std::vector<std::uint32_t> d(static_cast<std::size_t>(case4.precision), 0);
      const std::size_t gamma = rng() % static_cast<std::size_t>(case4.precision - 1);
      d[gamma] = 1;
      for (std::size_t j = gamma + 1; j < d.size(); ++j) d[j] = (rng() % 2) ? 2 : 0;
      x = PadicInt::from_digits(case4.prime, std::move(d));
    }
    c.count(lambda_member(x) == lambda_member(one - x));
  }

  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : words_of_length(n)) {
      c.count(closed_form_fixed_point(px, flip_word(w), n) ==
              one - closed_form_fixed_point(px, w, n));
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string docs = argc > 1 ? argv[1] : "docs/examples";

  std::vector<RunConfig> cases;
  for (int i = 1; i <= 4; ++i)
    cases.push_back(load_config_file(docs + "/case" + std::to_string(i) + ".cfg"));

  // Base limit set of the plain (unmixed) compositions at p = 3, K = 12.
  IndexFamily plain = plain_family(2);
  LimitSetSample base8 = enumerate_lambda0(cases[0].system, plain, 8, 4096);
  LimitSetSample base6 = enumerate_lambda0(cases[0].system, plain, 6, 4096);

  std::vector<Criterion> criteria;
  criteria.push_back(c1_closed_form_equivalence());
  criteria.push_back(c2_lipschitz(cases));
  criteria.push_back(c3_cauchy_rate(cases));
  criteria.push_back(c4_extension_identity(cases));
  criteria.push_back(c5_digit_characterization(base8));
  criteria.push_back(c6_uniform_perfectness(base8));
  criteria.push_back(c7_separation_and_doubling(base8));
  criteria.push_back(c8_image_identities(cases, base6));
  criteria.push_back(c9_coding_and_quasi_symmetry(cases[3]));
  criteria.push_back(c10_symmetry_and_flip(cases[3]));

  std::size_t failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    if (!c.pass) ++failures;
    std::printf("[%s] criterion %2zu: %s — %zu checks, %zu violations%s%s\n",
                c.pass ? "PASS" : "FAIL", i + 1, c.name.c_str(), c.checks, c.violations,
                c.note.empty() ? "" : "; ", c.note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
