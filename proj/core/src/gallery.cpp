#include "unconv/gallery.hpp"

namespace unconv {

namespace {

std::vector<std::uint32_t> parity_row(std::uint32_t entry) {
  if (entry == 2) return {1, 2};  // entry + k even keeps k
  if (entry == 1) return {2, 1};  // entry + k odd flips k
  fail(errc::entry_out_of_range, "parity entry " + std::to_string(entry) + " not in {1, 2}");
}

}  // namespace

PxSystem make_px_system(std::uint64_t p, int precision) {
  PadicInt mult = PadicInt::from_integer(p, precision, static_cast<long long>(p));
  AffineMap f1(mult, PadicInt::zero(p, precision));
  AffineMap f2(mult, PadicInt::from_integer(p, precision, 1 - static_cast<long long>(p)));
  return PxSystem{p, precision, ContractionSystem({std::move(f1), std::move(f2)})};
}

PadicInt closed_form_fixed_point(const PxSystem& px, const SymbolWord& word, std::size_t n) {
  if (n < 1) fail(errc::value_out_of_range, "composition depth n must be >= 1");
  if (word.alphabet() != 2)
    fail(errc::alphabet_mismatch, "closed form is defined over the alphabet {1, 2}");
  if (!word.has(n))
    fail(errc::word_too_short, "word provides " + std::to_string(word.prefix_size()) +
                                   " symbols, need " + std::to_string(n));
  const auto k = static_cast<std::size_t>(px.precision);
  // Numerator digit i is 1 iff symbol i+1 is 2; denominator is the geometric
  // sum 1 + p + ... + p^{n-1}, a unit. Terms beyond p^{K-1} vanish mod p^K.
  std::vector<std::uint32_t> num(k, 0);
  std::vector<std::uint32_t> den(k, 0);
  for (std::size_t i = 0; i < std::min(n, k); ++i) {
    num[i] = word.at(i) == 2 ? 1 : 0;
    den[i] = 1;
  }
  PadicInt numerator = PadicInt::from_digits(px.prime, std::move(num));
  PadicInt denominator = PadicInt::from_digits(px.prime, std::move(den));
  return numerator * denominator.unit_inverse();
}

bool lambda_member(const PadicInt& x) {
  if (x.is_zero()) return true;
  auto [gamma, unit] = x.canonical_decompose();
  if (unit[0] != 1) return false;
  const std::uint32_t top = static_cast<std::uint32_t>(x.prime() - 1);
  for (std::size_t i = 1; i < unit.size(); ++i) {
    if (unit[i] != 0 && unit[i] != top) return false;
  }
  return true;
}

XiMatrix XiMatrix::for_case(int c) {
  switch (c) {
    case 1: return XiMatrix{{{{2, 2}, {2, 2}}}};
    case 2: return XiMatrix{{{{2, 1}, {2, 1}}}};
    case 3: return XiMatrix{{{{2, 2}, {1, 1}}}};
    case 4: return XiMatrix{{{{2, 1}, {1, 1}}}};
  }
  fail(errc::value_out_of_range, "case index " + std::to_string(c) + " outside 1..4");
}

std::optional<int> XiMatrix::case_tag() const {
  for (int c = 1; c <= 4; ++c) {
    if (for_case(c).entries == entries) return c;
  }
  return std::nullopt;
}

IndexFamily parity_family(const XiMatrix& xi) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::string> specs;
  for (const auto& row : xi.entries) {
    for (std::uint32_t e : row) {
      rows.push_back(parity_row(e));
      specs.push_back("parity:" + std::to_string(e));
    }
  }
  return IndexFamily(2, 2, 2, std::move(rows), std::move(specs));
}

PadicInt case_image(int c, const PadicInt& x) {
  PadicInt one = PadicInt::one(x.prime(), x.precision());
  PadicInt two = one + one;
  switch (c) {
    case 1: return two * x * x;
    case 2: return two * x * (one - x);
    case 3: return x * x + (one - x) * (one - x);
    case 4: return x;
  }
  fail(errc::value_out_of_range, "case index " + std::to_string(c) + " outside 1..4");
}

SymbolWord flip_word(const SymbolWord& word) {
  if (word.alphabet() != 2)
    fail(errc::alphabet_mismatch, "flip is defined over the alphabet {1, 2}");
  auto flip_all = [](std::vector<std::uint32_t> symbols) {
    for (auto& s : symbols) s = s == 1 ? 2 : 1;
    return symbols;
  };
  return SymbolWord(flip_all(word.prefix()), flip_all(word.tail()), 2);
}

IndexFamily plain_family(std::uint32_t alphabet) {
  std::vector<std::uint32_t> identity(alphabet);
  for (std::uint32_t k = 1; k <= alphabet; ++k) identity[k - 1] = k;
  std::string spec = "perm:(";
  for (std::uint32_t k = 1; k <= alphabet; ++k) {
    if (k > 1) spec.push_back(',');
    spec += std::to_string(k);
  }
  spec.push_back(')');
  return IndexFamily(1, 1, alphabet, {std::move(identity)}, {std::move(spec)});
}

bool is_px_system(const ContractionSystem& system) {
  if (system.size() != 2) return false;
  const std::uint64_t p = system.prime();
  const int k = system.precision();
  PadicInt mult = PadicInt::from_integer(p, k, static_cast<long long>(p));
  PadicInt offset2 = PadicInt::from_integer(p, k, 1 - static_cast<long long>(p));
  return system.map(1).multiplier() == mult && system.map(1).offset().is_zero() &&
         system.map(2).multiplier() == mult && system.map(2).offset() == offset2;
}

std::optional<XiMatrix> match_px_parity(const ContractionSystem& system,
                                        const IndexFamily& family) {
  if (!is_px_system(system)) return std::nullopt;
  if (family.rows_m() != 2 || family.cols_l() != 2 || family.alphabet() != 2)
    return std::nullopt;
  XiMatrix xi{};
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      auto row = family.entry(i, j);
      if (row[0] == 1 && row[1] == 2) {
        xi.entries[i - 1][j - 1] = 2;
      } else if (row[0] == 2 && row[1] == 1) {
        xi.entries[i - 1][j - 1] = 1;
      } else {
        return std::nullopt;
      }
    }
  }
  return xi;
}

}  // namespace unconv
