#pragma once

// The concrete two-map system f1(x) = p*x, f2(x) = p*x + (1 - p). Every
// composed map has a closed-form fixed point, the limit set has an explicit
// digit characterization (leading unit digit 1, remaining digits in
// {0, p-1}), and the four 2x2 parity matrices produce limit sets that are
// polynomial images of the base set.

#include <array>
#include <cstdint>
#include <optional>

#include "unconv/family.hpp"

namespace unconv {

struct PxSystem {
  std::uint64_t prime;
  int precision;
  ContractionSystem system;

  const AffineMap& f1() const { return system.map(1); }
  const AffineMap& f2() const { return system.map(2); }
};

PxSystem make_px_system(std::uint64_t p, int precision);

// (d_1 + d_2 p + ... + d_n p^{n-1}) / (1 + p + ... + p^{n-1}), where d_k = 1
// iff the k-th symbol is 2. Equals the fixed point of the composed map.
PadicInt closed_form_fixed_point(const PxSystem& px, const SymbolWord& word, std::size_t n);

// Digit test, decided at the value's precision: zero, or p^gamma * (leading
// digit 1, all further digits in {0, p-1}).
bool lambda_member(const PadicInt& x);

struct XiMatrix {
  std::array<std::array<std::uint32_t, 2>, 2> entries;  // values in {1, 2}

  static XiMatrix for_case(int c);     // 1..4
  std::optional<int> case_tag() const;
};

// Parity action over the alphabet {1, 2}: entry 2 induces the identity index
// map, entry 1 the swap.
IndexFamily parity_family(const XiMatrix& xi);

// The image polynomials of the four cases: 2x^2, 2x(1-x), x^2 + (1-x)^2, x.
PadicInt case_image(int c, const PadicInt& x);

// Swap 1 <-> 2 symbol-wise; alphabet must be {1, 2}.
SymbolWord flip_word(const SymbolWord& word);

// Identity family (M = L = 1): plain compositions, no mixing.
IndexFamily plain_family(std::uint32_t alphabet);

// Recognize a PxSystem + parity-family pair; yields the matrix when matched.
std::optional<XiMatrix> match_px_parity(const ContractionSystem& system,
                                        const IndexFamily& family);
bool is_px_system(const ContractionSystem& system);

}  // namespace unconv
