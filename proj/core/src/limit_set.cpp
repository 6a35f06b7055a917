#include "unconv/limit_set.hpp"

#include <algorithm>
#include <map>

namespace unconv {

PadicInt component_fixed_point(const ContractionSystem& system,
                               std::span<const std::uint32_t> xi_row, const SymbolWord& alpha,
                               std::size_t n) {
  return component_map(system, xi_row, alpha, n).fixed_point();
}

PadicInt lambda0_point(const ContractionSystem& system, const IndexFamily& family,
                       const SymbolWord& alpha, std::size_t n) {
  if (family.alphabet() != system.size())
    fail(errc::validation_error, "family alphabet differs from the system size");
  PadicInt total = PadicInt::zero(system.prime(), system.precision());
  for (std::size_t i = 1; i <= family.rows_m(); ++i) {
    PadicInt prod = PadicInt::one(system.prime(), system.precision());
    for (std::size_t j = 1; j <= family.cols_l(); ++j) {
      prod = prod * component_fixed_point(system, family.entry(i, j), alpha, n);
    }
    total = total + prod;
  }
  return total;
}

LimitPoint limit_point(const ContractionSystem& system, const IndexFamily& family,
                       const SymbolWord& alpha, int depth) {
  if (depth < 1) fail(errc::value_out_of_range, "limit depth must be >= 1");
  if (!alpha.has(static_cast<std::size_t>(depth)))
    fail(errc::word_too_short, "finite word of length " + std::to_string(alpha.prefix_size()) +
                                   " cannot reach depth " + std::to_string(depth));
  PadicInt value = lambda0_point(system, family, alpha, static_cast<std::size_t>(depth));
  return LimitPoint{std::move(value), std::min(depth, system.precision()), alpha};
}

LimitSetSample enumerate_lambda0(const ContractionSystem& system, const IndexFamily& family,
                                 int depth, std::uint64_t budget) {
  if (depth < 1) fail(errc::value_out_of_range, "enumeration depth must be >= 1");
  if (depth > system.precision())
    fail(errc::value_out_of_range,
         "enumeration depth exceeds the working precision; residues would alias");
  const std::uint32_t n_alpha = family.alphabet();
  unsigned __int128 total = 1;
  for (int d = 0; d < depth; ++d) {
    total *= n_alpha;
    if (total > budget)
      fail(errc::budget_exceeded, "word count " + std::to_string(n_alpha) + "^" +
                                      std::to_string(depth) + " exceeds budget " +
                                      std::to_string(budget));
  }

  // Residue class key: the first `depth` digits. Word enumeration is
  // lexicographic, so the stored representative is deterministic.
  std::map<std::vector<std::uint32_t>, PadicInt> classes;
  std::vector<std::uint32_t> word(static_cast<std::size_t>(depth), 1);
  while (true) {
    SymbolWord alpha(word, n_alpha);
    PadicInt value = lambda0_point(system, family, alpha, static_cast<std::size_t>(depth));
    std::vector<std::uint32_t> key(value.digits().begin(), value.digits().begin() + depth);
    classes.emplace(std::move(key), std::move(value));

    int pos = depth - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == n_alpha) {
      word[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }

  LimitSetSample sample;
  sample.prime = system.prime();
  sample.precision = system.precision();
  sample.depth = depth;
  sample.alphabet = n_alpha;
  sample.rows_m = family.rows_m();
  sample.cols_l = family.cols_l();
  sample.family_desc = family.description();
  sample.points.reserve(classes.size());
  for (auto& [key, value] : classes) sample.points.push_back(std::move(value));
  std::sort(sample.points.begin(), sample.points.end(), lex_less);
  return sample;
}

PadicInt f_tilde(const ContractionSystem& system, const IndexFamily& family,
                 const SymbolWord& alpha, std::size_t n, const SymbolWord& beta, std::size_t m) {
  if (family.alphabet() != system.size())
    fail(errc::validation_error, "family alphabet differs from the system size");
  PadicInt total = PadicInt::zero(system.prime(), system.precision());
  for (std::size_t i = 1; i <= family.rows_m(); ++i) {
    PadicInt prod = PadicInt::one(system.prime(), system.precision());
    for (std::size_t j = 1; j <= family.cols_l(); ++j) {
      auto row = family.entry(i, j);
      AffineMap front = component_map(system, row, alpha, n);
      PadicInt anchor = component_fixed_point(system, row, beta, m);
      prod = prod * front(anchor);
    }
    total = total + prod;
  }
  return total;
}

}  // namespace unconv
