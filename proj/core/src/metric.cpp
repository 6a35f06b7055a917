#include "unconv/metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace unconv {

namespace {

std::string exp_text(std::uint64_t p, int e) {
  return std::to_string(p) + "^-" + std::to_string(e);
}

void require_in_sample(std::span<const PadicInt> sample, const PadicInt& x, const char* who) {
  for (const auto& y : sample) {
    if (y == x) return;
  }
  fail(errc::validation_error, std::string(who) + " center is not a sample point");
}

void require_radius(int r_exp, int precision) {
  if (r_exp < 0 || r_exp > precision)
    fail(errc::value_out_of_range,
         "radius exponent " + std::to_string(r_exp) + " outside [0, K]");
}

}  // namespace

bool BallSpec::contains(const PadicInt& x) const {
  Valuation v = pdist(x, center);
  if (closed) return v.exponent >= radius_exponent;
  return v.exponent > radius_exponent || v.at_precision;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "FAIL";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

std::string MetricReport::to_text() const {
  std::ostringstream os;
  os << "[" << verdict_name(verdict) << "] " << property;
  if (!parameters.empty()) os << " (" << parameters << ")";
  if (constant_exponent) os << " constant_exp=" << *constant_exponent;
  if (!witnesses.empty()) {
    os << " witnesses=[";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) os << "; ";
      os << witnesses[i];
    }
    os << "]";
  }
  if (!note.empty()) os << " -- " << note;
  return os.str();
}

Valuation pdist(const PadicInt& x, const PadicInt& y) { return (x - y).valuation(); }

Valuation diameter(std::span<const PadicInt> points) {
  if (points.size() < 2) fail(errc::too_few_points, "diameter needs at least two points");
  const int k = points.front().precision();
  // In an ultrametric the smallest pairwise valuation is the first digit
  // position at which the sample is not constant.
  for (int i = 0; i < k; ++i) {
    for (const auto& pt : points) {
      if (pt.digit(i) != points.front().digit(i))
        return {points.front().prime(), i, false};
    }
  }
  fail(errc::too_few_points, "all points coincide at this precision");
}

MetricReport perfect_annulus(std::span<const PadicInt> sample, const PadicInt& x0, int r_exp,
                             int c_exp) {
  require_in_sample(sample, x0, "annulus");
  require_radius(r_exp, x0.precision());
  if (c_exp < 0) fail(errc::value_out_of_range, "annulus constant exponent must be >= 0");

  MetricReport report;
  report.property = "uniform-perfectness-annulus";
  report.parameters = "x0=" + x0.digit_string() + " r=" + exp_text(x0.prime(), r_exp) +
                      " c=" + exp_text(x0.prime(), c_exp);
  // Certifiable window: valuations in [r_exp, r_exp + c_exp] strictly below
  // precision (an at-precision difference cannot witness a lower bound). The
  // recorded witness is the in-window point at the largest distance.
  const int hi = std::min(r_exp + c_exp, x0.precision() - 1);
  const PadicInt* best = nullptr;
  int best_val = hi + 1;
  for (const auto& y : sample) {
    Valuation v = pdist(y, x0);
    if (!v.at_precision && v.exponent >= r_exp && v.exponent <= hi && v.exponent < best_val) {
      best = &y;
      best_val = v.exponent;
    }
  }
  if (best) {
    report.verdict = Verdict::pass;
    report.constant_exponent = best_val;
    report.witnesses.push_back(best->digit_string() + " at distance " +
                               exp_text(x0.prime(), best_val));
  } else {
    report.verdict = Verdict::fail;
    report.note = "annulus empty";
  }
  return report;
}

MetricReport disconnect_separation(std::span<const PadicInt> sample, const PadicInt& a,
                                   int r_exp) {
  require_in_sample(sample, a, "separation");
  require_radius(r_exp, a.precision());

  MetricReport report;
  report.property = "uniform-disconnectedness-separation";
  report.parameters =
      "a=" + a.digit_string() + " r=" + exp_text(a.prime(), r_exp);

  std::vector<const PadicInt*> inside, outside;
  for (const auto& y : sample) {
    (pdist(y, a).exponent >= r_exp ? inside : outside).push_back(&y);
  }
  if (outside.empty()) {
    report.verdict = Verdict::pass;
    report.note = "complement empty; separation vacuous";
    return report;
  }

  // Exact separation: distance p^(-v) with v the largest cross valuation.
  int max_val = -1;
  const PadicInt* wx = nullptr;
  const PadicInt* wy = nullptr;
  for (const PadicInt* x : inside) {
    for (const PadicInt* y : outside) {
      int v = pdist(*x, *y).exponent;
      if (v > max_val) {
        max_val = v;
        wx = x;
        wy = y;
      }
    }
  }
  report.constant_exponent = max_val;
  if (max_val < r_exp) {
    report.verdict = Verdict::pass;
    report.note = "separation " + exp_text(a.prime(), max_val) + " exceeds radius " +
                  exp_text(a.prime(), r_exp);
  } else {
    report.verdict = Verdict::fail;
    report.witnesses.push_back(wx->digit_string() + " | " + wy->digit_string());
    report.note = "separation does not exceed the ball radius";
  }
  return report;
}

MetricReport doubling_cover(std::span<const PadicInt> sample, const PadicInt& a, int r_exp) {
  require_in_sample(sample, a, "doubling");
  require_radius(r_exp, a.precision());

  MetricReport report;
  report.property = "doubling-cover";
  report.parameters = "a=" + a.digit_string() + " r=" + exp_text(a.prime(), r_exp);

  // Members of the closed ball split by the digit at position r_exp; each
  // class sits in one ball of radius p^(-r_exp-1).
  std::map<std::uint32_t, const PadicInt*> centers;
  std::size_t members = 0;
  for (const auto& y : sample) {
    if (pdist(y, a).exponent < r_exp) continue;
    ++members;
    std::uint32_t cls = r_exp < y.precision() ? y.digit(r_exp) : 0;
    centers.emplace(cls, &y);
  }
  const std::size_t count = members == 0 ? 0 : std::max<std::size_t>(centers.size(), 1);
  report.constant_exponent = static_cast<int>(count);
  report.verdict = count <= a.prime() ? Verdict::pass : Verdict::fail;
  for (const auto& [cls, pt] : centers) report.witnesses.push_back(pt->digit_string());
  report.note = std::to_string(count) + " subballs of radius " +
                exp_text(a.prime(), r_exp + 1) + " cover " + std::to_string(members) +
                " members (p = " + std::to_string(a.prime()) + ")";
  return report;
}

std::string SymbolDistance::text() const {
  if (equal) return "0 (equal words)";
  std::string s = "(" + std::to_string(base.num) + "/" + std::to_string(base.den) + ")^" +
                  std::to_string(common_prefix);
  if (!exact) s += " (upper bound; L >= " + std::to_string(common_prefix) + ")";
  return s;
}

SymbolDistance symbol_dist(const SymbolWord& x, const SymbolWord& y, Fraction a) {
  if (a.num <= 0 || a.den <= 0 || a.num >= a.den)
    fail(errc::value_out_of_range, "Cantor metric parameter must satisfy 0 < a < 1");
  if (x.alphabet() != y.alphabet())
    fail(errc::alphabet_mismatch, "Cantor distance needs a common alphabet");

  SymbolDistance d;
  d.base = a;

  std::size_t bound;
  bool decides_equality;
  if (x.infinite() && y.infinite()) {
    // Two eventually periodic sequences agreeing this far agree everywhere.
    bound = std::max(x.prefix_size() + x.tail().size(), y.prefix_size() + y.tail().size()) +
            std::lcm(x.tail().size(), y.tail().size());
    decides_equality = true;
  } else if (!x.infinite() && !y.infinite()) {
    if (x.prefix_size() != y.prefix_size()) {
      bound = std::min(x.prefix_size(), y.prefix_size());
      decides_equality = false;  // the shorter word cannot be unfolded further
    } else {
      bound = x.prefix_size();
      decides_equality = true;
    }
  } else {
    bound = x.infinite() ? y.prefix_size() : x.prefix_size();
    decides_equality = false;
  }

  for (std::size_t i = 0; i < bound; ++i) {
    if (x.at(i) != y.at(i)) {
      d.common_prefix = i;
      return d;
    }
  }
  if (decides_equality) {
    d.equal = true;
    d.common_prefix = bound;
    return d;
  }
  if (!x.infinite() && !y.infinite())
    fail(errc::incomparable_length,
         "finite words of different lengths agree on the comparable range");
  d.exact = false;
  d.common_prefix = bound;
  return d;
}

QsModulus QsModulus::power(long long num, long long den) {
  if (num <= 0 || den <= 0) fail(errc::value_out_of_range, "modulus exponent must be positive");
  return QsModulus{false, num, den};
}

namespace {

// p^a <= 2^b, exactly where possible. For p = 2 this is a <= b. For odd p the
// two powers are never equal unless a = b = 0 (unique factorization), and at
// the exponent sizes that reach this comparison the long-double gap is many
// orders of magnitude above rounding error.
bool pow_le(std::uint64_t p, long long a, long long b) {
  if (p == 2) return a <= b;
  if (a <= 0 && b >= 0) return true;
  if (a > 0 && b <= 0) return false;
  long double lhs = static_cast<long double>(a) * std::log(static_cast<long double>(p));
  long double rhs = static_cast<long double>(b) * std::log(2.0L);
  return lhs <= rhs;
}

}  // namespace

MetricReport quasi_symmetry_audit(std::span<const std::array<SymbolWord, 3>> triples,
                                  const ContractionSystem& system, const IndexFamily& family,
                                  QsModulus modulus) {
  MetricReport report;
  report.property = "quasi-symmetry-audit";
  const std::uint64_t p = system.prime();
  const int precision = system.precision();
  report.parameters = modulus.snowflake
                          ? "eta(t)=t^(log " + std::to_string(p) + "/log 2)"
                          : "eta(t)=t^(" + std::to_string(modulus.num) + "/" +
                                std::to_string(modulus.den) + ")";

  // pi: word -> limit-point value. A finite word is its own genuine fixed
  // point; an infinite word is evaluated to full precision. Memoized, since
  // triple sets revisit the same few words heavily.
  std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, PadicInt> cache;
  auto pi = [&](const SymbolWord& w) -> const PadicInt& {
    auto key = std::make_pair(w.prefix(), w.tail());
    auto it = cache.find(key);
    if (it == cache.end()) {
      PadicInt value = w.infinite()
                           ? limit_point(system, family, w, precision).value
                           : lambda0_point(system, family, w, w.prefix_size());
      it = cache.emplace(std::move(key), std::move(value)).first;
    }
    return it->second;
  };

  const Fraction half{1, 2};
  std::size_t degenerate = 0;
  std::size_t checked = 0;
  std::optional<int> worst_margin;  // snowflake only: min of (L side - v side)

  for (const auto& triple : triples) {
    const SymbolWord& x = triple[0];
    const SymbolWord& y = triple[1];
    const SymbolWord& z = triple[2];

    SymbolDistance dxz = symbol_dist(x, z, half);
    if (dxz.equal) {
      ++degenerate;  // t = d(x,y)/d(x,z) undefined
      continue;
    }
    SymbolDistance dxy = symbol_dist(x, y, half);
    if (dxy.equal) {
      ++checked;  // d(x,y) = 0: passes for every t > 0
      continue;
    }

    Valuation vxy = pdist(pi(x), pi(y));
    Valuation vxz = pdist(pi(x), pi(z));
    if (vxz.at_precision) {
      ++degenerate;  // image distance below resolution; ratio unresolvable
      continue;
    }
    const long long l_xy = static_cast<long long>(dxy.common_prefix);
    const long long l_xz = static_cast<long long>(dxz.common_prefix);
    const long long v_xy = vxy.exponent;  // at_precision means >= K: conservative
    const long long v_xz = vxz.exponent;

    // Condition p^(v_xz - v_xy) <= 2^(s * (L_xz - L_xy)) in exponent form.
    bool ok;
    if (modulus.snowflake) {
      ok = v_xz - v_xy <= l_xz - l_xy;
      int margin = static_cast<int>((l_xz - l_xy) - (v_xz - v_xy));
      if (!worst_margin || margin < *worst_margin) worst_margin = margin;
    } else {
      ok = pow_le(p, modulus.den * (v_xz - v_xy), modulus.num * (l_xz - l_xy));
    }
    ++checked;
    if (!ok) {
      report.verdict = Verdict::fail;
      if (report.witnesses.size() < 4) {
        report.witnesses.push_back("x=" + x.str() + " y=" + y.str() + " z=" + z.str() +
                                   " L_xy=" + std::to_string(l_xy) + " L_xz=" +
                                   std::to_string(l_xz) + " v_xy=" + std::to_string(v_xy) +
                                   " v_xz=" + std::to_string(v_xz));
      }
    }
  }

  if (checked == 0) report.verdict = Verdict::not_applicable;
  if (modulus.snowflake && worst_margin) report.constant_exponent = *worst_margin;
  report.note = std::to_string(checked) + " triples checked, " + std::to_string(degenerate) +
                " degenerate skipped";
  return report;
}

MetricReport isolation_scan(const LimitSetSample& coarse, const LimitSetSample& fine,
                            int margin) {
  if (coarse.prime != fine.prime || coarse.precision != fine.precision)
    fail(errc::validation_error, "samples live over different arithmetic");
  if (coarse.family_desc != fine.family_desc)
    fail(errc::validation_error, "samples come from different families");
  if (margin < 0 || margin > coarse.depth)
    fail(errc::value_out_of_range, "margin outside [0, coarse depth]");

  MetricReport report;
  report.property = "isolation-scan";
  report.parameters = "coarse_depth=" + std::to_string(coarse.depth) +
                      " fine_depth=" + std::to_string(fine.depth) +
                      " margin=" + std::to_string(margin);
  if (fine.points.size() < 2) {
    report.verdict = Verdict::not_applicable;
    report.note = "fewer than two limit points";
    return report;
  }

  const int need = coarse.depth - margin;
  std::optional<int> tightest;  // smallest neighbor valuation margin observed
  for (const auto& x : coarse.points) {
    bool found = false;
    for (const auto& y : fine.points) {
      if (x.eq_mod(y, fine.depth)) continue;  // same residue class: not a neighbor
      Valuation v = pdist(x, y);
      if (v.exponent >= need) {
        found = true;
        if (!tightest || v.exponent < *tightest) tightest = v.exponent;
        break;
      }
    }
    if (!found) {
      report.verdict = Verdict::fail;
      report.witnesses.push_back(x.digit_string());
    }
  }
  report.constant_exponent = tightest;
  if (report.verdict == Verdict::fail)
    report.note = "isolated at radius " + exp_text(coarse.prime, need);
  return report;
}

}  // namespace unconv
