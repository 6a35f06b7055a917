#pragma once

// Index families: an M x L table of maps [1,N] -> [1,N] that routes word
// symbols to base maps, and the sum-of-products compositions it generates,
//   F(x) = sum_{i<=M} prod_{j<=L} f_{xi_ij(a_1)} o ... o f_{xi_ij(a_n)} (x).
// A family must cover the whole alphabet; otherwise part of the system is
// dead weight and the constructor refuses.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unconv/affine.hpp"
#include "unconv/word.hpp"

namespace unconv {

class IndexFamily {
 public:
  // rows holds M*L lookup rows in row-major order, each of length N with
  // values in [1, N]. entry_specs, when given, keeps the original entry
  // notation ("perm:(2,1)", "star:2", "parity:1") for serialization.
  IndexFamily(std::size_t m, std::size_t l, std::uint32_t alphabet,
              std::vector<std::vector<std::uint32_t>> rows,
              std::vector<std::string> entry_specs = {});

  std::size_t rows_m() const { return m_; }
  std::size_t cols_l() const { return l_; }
  std::uint32_t alphabet() const { return alphabet_; }

  std::span<const std::uint32_t> entry(std::size_t i, std::size_t j) const;  // 1-based
  const std::string& entry_spec(std::size_t i, std::size_t j) const;

  // "spec,spec;spec,spec" — one ';'-separated group per table row.
  std::string description() const;

 private:
  std::size_t m_ = 1, l_ = 1;
  std::uint32_t alphabet_ = 1;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::string> specs_;
};

// True iff the union of all images over all (i, j, k) is the full alphabet.
bool validate_coverage(const std::vector<std::vector<std::uint32_t>>& rows,
                       std::uint32_t alphabet);
bool validate_coverage(const IndexFamily& family);

// (ell * k): ell + k reduced into [1, N], with multiples of N mapping to N.
std::uint32_t star_action(std::uint32_t ell, std::uint32_t k, std::uint32_t alphabet);

// Family whose (i, j) entry acts by k -> (values[i][j] * k).
IndexFamily star_family(const std::vector<std::vector<std::uint32_t>>& values,
                        std::uint32_t alphabet);

// f_{xi(a_1)} o ... o f_{xi(a_n)} as one affine map; its multiplier valuation
// is at least min(n, K).
AffineMap component_map(const ContractionSystem& system, std::span<const std::uint32_t> xi_row,
                        const SymbolWord& alpha, std::size_t n);

// Exact evaluation of the sum of products at x.
PadicInt apply_unconventional(const ContractionSystem& system, const IndexFamily& family,
                              const SymbolWord& alpha, std::size_t n, const PadicInt& x);

}  // namespace unconv
