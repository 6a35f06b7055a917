#include "unconv/config.hpp"

#include <charconv>
#include <map>
#include <optional>

#include "unconv/gallery.hpp"
#include "unconv/io.hpp"

namespace unconv {

namespace {

struct Entry {
  std::string value;
  int line;
  mutable bool used = false;
};

using KeyMap = std::map<std::string, Entry>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

KeyMap tokenize(std::string_view text) {
  KeyMap keys;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (key.empty())
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": empty key");
    if (!keys.emplace(key, Entry{std::move(value), line_no}).second)
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  return keys;
}

const Entry* find(const KeyMap& keys, const std::string& key) {
  auto it = keys.find(key);
  if (it == keys.end()) return nullptr;
  it->second.used = true;
  return &it->second;
}

const Entry& require(const KeyMap& keys, const std::string& key) {
  const Entry* e = find(keys, key);
  if (!e) fail(errc::parse_error, "missing required key '" + key + "'");
  return *e;
}

long long parse_ll(const Entry& e, const std::string& key) {
  std::string_view v = e.value;
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    fail(errc::parse_error, "line " + std::to_string(e.line) + ": key '" + key +
                                "' expects an integer, got '" + e.value + "'");
  return out;
}

std::uint64_t parse_u64(const Entry& e, const std::string& key) {
  long long v = parse_ll(e, key);
  if (v < 0)
    fail(errc::parse_error, "line " + std::to_string(e.line) + ": key '" + key +
                                "' must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

bool parse_bool(const Entry& e, const std::string& key) {
  if (e.value == "true" || e.value == "on" || e.value == "1") return true;
  if (e.value == "false" || e.value == "off" || e.value == "0") return false;
  fail(errc::parse_error, "line " + std::to_string(e.line) + ": key '" + key +
                              "' expects true/false");
}

// "3/1", "-2", or a digit string "0,1,0,...". Digit strings must carry
// exactly K digits.
PadicInt parse_coefficient(const Entry& e, const std::string& key, std::uint64_t p,
                           int precision) {
  if (e.value.find(',') != std::string::npos) {
    PadicInt x = PadicInt::parse_digits(p, e.value);
    if (x.precision() != precision)
      fail(errc::validation_error, "line " + std::to_string(e.line) + ": key '" + key + "': " +
                                       std::to_string(x.precision()) +
                                       " digits given, precision is " + std::to_string(precision));
    return x;
  }
  std::string_view v = e.value;
  std::size_t slash = v.find('/');
  long long num = 0, den = 1;
  {
    std::string_view tok = slash == std::string_view::npos ? v : v.substr(0, slash);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), num);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "line " + std::to_string(e.line) + ": bad rational '" + e.value + "'");
  }
  if (slash != std::string_view::npos) {
    std::string_view tok = v.substr(slash + 1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), den);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "line " + std::to_string(e.line) + ": bad rational '" + e.value + "'");
  }
  return PadicInt::from_rational(p, precision, num, den);
}

std::vector<std::uint32_t> parse_perm_row(const Entry& e, std::uint32_t alphabet) {
  std::string_view v = e.value;
  // perm:(v1,...,vN)
  std::size_t open = v.find('(');
  std::size_t close = v.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    fail(errc::parse_error, "line " + std::to_string(e.line) + ": perm entry needs (v1,...,vN)");
  std::vector<std::uint32_t> row;
  std::string_view body = v.substr(open + 1, close - open - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = trim(body.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::uint32_t s = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), s);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "line " + std::to_string(e.line) + ": bad perm value '" +
                                  std::string(tok) + "'");
    row.push_back(s);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (row.size() != alphabet)
    fail(errc::validation_error, "line " + std::to_string(e.line) + ": perm row length " +
                                     std::to_string(row.size()) + " differs from N = " +
                                     std::to_string(alphabet));
  return row;
}

std::uint32_t parse_entry_value(const Entry& e, std::string_view rest) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    fail(errc::parse_error, "line " + std::to_string(e.line) + ": bad entry value '" +
                                std::string(rest) + "'");
  return v;
}

}  // namespace

RunConfig parse_config(std::string_view text, const ConfigOverrides& overrides) {
  KeyMap keys = tokenize(text);

  const std::uint64_t p = parse_u64(require(keys, "p"), "p");
  if (!is_prime(p)) fail(errc::validation_error, "p = " + std::to_string(p) + " is not prime");
  const int precision =
      overrides.precision.value_or(static_cast<int>(parse_u64(require(keys, "precision"), "precision")));
  if (precision < 1) fail(errc::validation_error, "precision must be >= 1");

  const auto n = static_cast<std::uint32_t>(parse_u64(require(keys, "maps.N"), "maps.N"));
  if (n < 1) fail(errc::validation_error, "maps.N must be >= 1");

  std::vector<AffineMap> maps;
  maps.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::string base = "maps." + std::to_string(i) + ".";
    const Entry& ea = require(keys, base + "a");
    const Entry& eb = require(keys, base + "b");
    PadicInt a = parse_coefficient(ea, base + "a", p, precision);
    PadicInt b = parse_coefficient(eb, base + "b", p, precision);
    try {
      maps.emplace_back(std::move(a), std::move(b));
    } catch (const error& err) {
      if (err.code() == errc::not_contractive)
        fail(errc::validation_error, "contraction certificate failed for map " +
                                         std::to_string(i) + " (line " +
                                         std::to_string(ea.line) + ")");
      throw;
    }
  }
  ContractionSystem system(std::move(maps));

  const auto m = static_cast<std::size_t>(parse_u64(require(keys, "family.M"), "family.M"));
  const auto l = static_cast<std::size_t>(parse_u64(require(keys, "family.L"), "family.L"));
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::string> specs;
  int first_entry_line = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= l; ++j) {
      const std::string key = "family.entry." + std::to_string(i) + "." + std::to_string(j);
      const Entry& e = require(keys, key);
      if (!first_entry_line) first_entry_line = e.line;
      std::string_view v = e.value;
      if (v.substr(0, 5) == "perm:") {
        rows.push_back(parse_perm_row(e, n));
      } else if (v.substr(0, 5) == "star:") {
        std::uint32_t ell = parse_entry_value(e, v.substr(5));
        if (ell < 1 || ell > n)
          fail(errc::validation_error, "line " + std::to_string(e.line) +
                                           ": star value outside [1, N]");
        std::vector<std::uint32_t> row(n);
        for (std::uint32_t k = 1; k <= n; ++k) row[k - 1] = star_action(ell, k, n);
        rows.push_back(std::move(row));
      } else if (v.substr(0, 7) == "parity:") {
        if (n != 2)
          fail(errc::validation_error, "line " + std::to_string(e.line) +
                                           ": parity entries require N = 2");
        std::uint32_t val = parse_entry_value(e, v.substr(7));
        if (val == 2) {
          rows.push_back({1, 2});
        } else if (val == 1) {
          rows.push_back({2, 1});
        } else {
          fail(errc::validation_error, "line " + std::to_string(e.line) +
                                           ": parity value must be 1 or 2");
        }
      } else {
        fail(errc::parse_error, "line " + std::to_string(e.line) +
                                    ": entry must be perm:(...), star:l or parity:v");
      }
      specs.emplace_back(v);
    }
  }

  std::optional<IndexFamily> family;
  try {
    family.emplace(m, l, n, std::move(rows), std::move(specs));
  } catch (const error& err) {
    if (err.code() == errc::coverage_violation)
      fail(errc::validation_error,
           "coverage condition failed: family images do not reach every map index (family entries"
           " start at line " + std::to_string(first_entry_line) + ")");
    throw;
  }

  RunConfig cfg{.prime = p,
                .precision = precision,
                .system = std::move(system),
                .family = std::move(*family)};
  if (const Entry* e = find(keys, "enumerate.depth"))
    cfg.depth = static_cast<int>(parse_u64(*e, "enumerate.depth"));
  if (const Entry* e = find(keys, "seed")) cfg.seed = parse_u64(*e, "seed");
  if (const Entry* e = find(keys, "budget")) cfg.budget = parse_u64(*e, "budget");
  if (const Entry* e = find(keys, "out")) cfg.out = e->value;
  if (overrides.depth) cfg.depth = *overrides.depth;
  if (overrides.seed) cfg.seed = *overrides.seed;
  if (overrides.budget) cfg.budget = *overrides.budget;
  if (overrides.out) cfg.out = *overrides.out;
  if (cfg.depth < 1 || cfg.depth > precision)
    fail(errc::validation_error, "enumerate.depth must lie in [1, precision]");
  if (const Entry* e = find(keys, "verify.samples"))
    cfg.verify_samples = parse_u64(*e, "verify.samples");
  if (const Entry* e = find(keys, "verify.words")) cfg.verify_words = parse_u64(*e, "verify.words");
  if (const Entry* e = find(keys, "verify.lipschitz"))
    cfg.verify_lipschitz = parse_bool(*e, "verify.lipschitz");
  if (const Entry* e = find(keys, "verify.cauchy")) cfg.verify_cauchy = parse_bool(*e, "verify.cauchy");
  if (const Entry* e = find(keys, "verify.extension"))
    cfg.verify_extension = parse_bool(*e, "verify.extension");
  if (const Entry* e = find(keys, "verify.metric")) cfg.verify_metric = parse_bool(*e, "verify.metric");
  if (const Entry* e = find(keys, "verify.gallery"))
    cfg.verify_gallery = parse_bool(*e, "verify.gallery");

  for (const auto& [key, entry] : keys) {
    if (!entry.used)
      fail(errc::parse_error, "line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path, const ConfigOverrides& overrides) {
  return parse_config(read_file(path), overrides);
}

}  // namespace unconv
