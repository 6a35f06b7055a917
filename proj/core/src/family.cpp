#include "unconv/family.hpp"

#include <algorithm>

namespace unconv {

IndexFamily::IndexFamily(std::size_t m, std::size_t l, std::uint32_t alphabet,
                         std::vector<std::vector<std::uint32_t>> rows,
                         std::vector<std::string> entry_specs)
    : m_(m), l_(l), alphabet_(alphabet), rows_(std::move(rows)), specs_(std::move(entry_specs)) {
  if (m_ < 1 || l_ < 1) fail(errc::value_out_of_range, "family needs M >= 1 and L >= 1");
  if (alphabet_ < 1) fail(errc::value_out_of_range, "alphabet size must be >= 1");
  if (rows_.size() != m_ * l_)
    fail(errc::validation_error, "family table has " + std::to_string(rows_.size()) +
                                     " entries, expected M*L = " + std::to_string(m_ * l_));
  for (const auto& row : rows_) {
    if (row.size() != alphabet_)
      fail(errc::validation_error, "index row length " + std::to_string(row.size()) +
                                       " differs from alphabet " + std::to_string(alphabet_));
    for (std::uint32_t v : row) {
      if (v < 1 || v > alphabet_)
        fail(errc::entry_out_of_range, "index value " + std::to_string(v) + " outside [1, " +
                                           std::to_string(alphabet_) + "]");
    }
  }
  if (!validate_coverage(rows_, alphabet_))
    fail(errc::coverage_violation,
         "family images do not cover [1, " + std::to_string(alphabet_) + "]");
  if (specs_.empty()) {
    specs_.reserve(rows_.size());
    for (const auto& row : rows_) {
      std::string s = "perm:(";
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) s.push_back(',');
        s += std::to_string(row[k]);
      }
      s.push_back(')');
      specs_.push_back(std::move(s));
    }
  } else if (specs_.size() != rows_.size()) {
    fail(errc::validation_error, "entry spec count differs from table size");
  }
}

std::span<const std::uint32_t> IndexFamily::entry(std::size_t i, std::size_t j) const {
  if (i < 1 || i > m_ || j < 1 || j > l_)
    fail(errc::value_out_of_range, "family entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") outside the M x L table");
  return rows_[(i - 1) * l_ + (j - 1)];
}

const std::string& IndexFamily::entry_spec(std::size_t i, std::size_t j) const {
  entry(i, j);  // bounds check
  return specs_[(i - 1) * l_ + (j - 1)];
}

std::string IndexFamily::description() const {
  // Entries are space separated within a table row (specs may contain
  // commas), rows are ';' separated.
  std::string s;
  for (std::size_t i = 1; i <= m_; ++i) {
    if (i > 1) s.push_back(';');
    for (std::size_t j = 1; j <= l_; ++j) {
      if (j > 1) s.push_back(' ');
      s += entry_spec(i, j);
    }
  }
  return s;
}

bool validate_coverage(const std::vector<std::vector<std::uint32_t>>& rows,
                       std::uint32_t alphabet) {
  std::vector<bool> hit(alphabet, false);
  for (const auto& row : rows) {
    for (std::uint32_t v : row) {
      if (v >= 1 && v <= alphabet) hit[v - 1] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool validate_coverage(const IndexFamily& family) {
  std::vector<bool> hit(family.alphabet(), false);
  for (std::size_t i = 1; i <= family.rows_m(); ++i) {
    for (std::size_t j = 1; j <= family.cols_l(); ++j) {
      for (std::uint32_t v : family.entry(i, j)) hit[v - 1] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::uint32_t star_action(std::uint32_t ell, std::uint32_t k, std::uint32_t alphabet) {
  if (ell < 1 || ell > alphabet || k < 1 || k > alphabet)
    fail(errc::value_out_of_range, "star action arguments outside [1, N]");
  std::uint32_t s = (ell + k) % alphabet;
  return s == 0 ? alphabet : s;
}

IndexFamily star_family(const std::vector<std::vector<std::uint32_t>>& values,
                        std::uint32_t alphabet) {
  if (values.empty() || values.front().empty())
    fail(errc::value_out_of_range, "star family needs a nonempty M x L value table");
  const std::size_t m = values.size();
  const std::size_t l = values.front().size();
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::string> specs;
  rows.reserve(m * l);
  for (const auto& value_row : values) {
    if (value_row.size() != l)
      fail(errc::validation_error, "star family value rows must share one length");
    for (std::uint32_t ell : value_row) {
      std::vector<std::uint32_t> row(alphabet);
      for (std::uint32_t k = 1; k <= alphabet; ++k) row[k - 1] = star_action(ell, k, alphabet);
      rows.push_back(std::move(row));
      specs.push_back("star:" + std::to_string(ell));
    }
  }
  return IndexFamily(m, l, alphabet, std::move(rows), std::move(specs));
}

AffineMap component_map(const ContractionSystem& system, std::span<const std::uint32_t> xi_row,
                        const SymbolWord& alpha, std::size_t n) {
  if (n < 1) fail(errc::value_out_of_range, "composition depth n must be >= 1");
  if (!alpha.has(n))
    fail(errc::word_too_short, "word provides " + std::to_string(alpha.prefix_size()) +
                                   " symbols, need " + std::to_string(n));
  if (xi_row.size() != system.size())
    fail(errc::validation_error, "index row length differs from the system size");
  auto base = [&](std::size_t k) -> const AffineMap& {
    return system.map(xi_row[alpha.at(k) - 1]);
  };
  AffineMap acc = base(0);
  for (std::size_t k = 1; k < n; ++k) acc = compose(acc, base(k));
  return acc;
}

PadicInt apply_unconventional(const ContractionSystem& system, const IndexFamily& family,
                              const SymbolWord& alpha, std::size_t n, const PadicInt& x) {
  if (family.alphabet() != system.size())
    fail(errc::validation_error, "family alphabet differs from the system size");
  PadicInt total = PadicInt::zero(system.prime(), system.precision());
  for (std::size_t i = 1; i <= family.rows_m(); ++i) {
    PadicInt prod = PadicInt::one(system.prime(), system.precision());
    for (std::size_t j = 1; j <= family.cols_l(); ++j) {
      prod = prod * component_map(system, family.entry(i, j), alpha, n)(x);
    }
    total = total + prod;
  }
  return total;
}

}  // namespace unconv
