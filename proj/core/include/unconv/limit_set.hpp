#pragma once

// Limit points and limit-set samples of the sum-of-products compositions.
// The depth-n value of a word is the sum of products of the component fixed
// points; consecutive depths agree mod p^n, so a depth-n evaluation carries a
// guaranteed error exponent of n. The limit set itself is represented by its
// depth-indexed samples, which are p^(-depth)-dense in it.

#include <cstdint>
#include <string>
#include <vector>

#include "unconv/family.hpp"

namespace unconv {

// Fixed point of the composed map f_{xi(a_1)} o ... o f_{xi(a_n)}.
PadicInt component_fixed_point(const ContractionSystem& system,
                               std::span<const std::uint32_t> xi_row, const SymbolWord& alpha,
                               std::size_t n);

// sum_i prod_j of the component fixed points at depth n.
PadicInt lambda0_point(const ContractionSystem& system, const IndexFamily& family,
                       const SymbolWord& alpha, std::size_t n);

struct LimitPoint {
  PadicInt value;
  int guaranteed_exponent;  // value agrees with the true limit mod p^this
  SymbolWord word;
};

LimitPoint limit_point(const ContractionSystem& system, const IndexFamily& family,
                       const SymbolWord& alpha, int depth);

struct LimitSetSample {
  std::uint64_t prime = 2;
  int precision = 1;
  int depth = 1;
  std::uint32_t alphabet = 1;
  std::size_t rows_m = 1, cols_l = 1;
  std::string family_desc;
  std::vector<PadicInt> points;  // digit-lex sorted, pairwise distinct mod p^depth
};

// Depth-d values over all words of length exactly d, deduplicated mod p^depth
// (the modulus the depth guarantees). The representative of each residue
// class is the value of the lexicographically first word that produced it.
LimitSetSample enumerate_lambda0(const ContractionSystem& system, const IndexFamily& family,
                                 int depth, std::uint64_t budget);

// Pre-limit extension value sum_i prod_j F_{alpha,n}(fix of F_{beta,m});
// agrees with limit_point(concat_words(alpha, n, beta), n + m) mod
// p^min(n+m, K).
PadicInt f_tilde(const ContractionSystem& system, const IndexFamily& family,
                 const SymbolWord& alpha, std::size_t n, const SymbolWord& beta, std::size_t m);

}  // namespace unconv
