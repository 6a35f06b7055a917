#include "unconv/word.hpp"

#include <charconv>

namespace unconv {

namespace {

void check_symbols(const std::vector<std::uint32_t>& symbols, std::uint32_t alphabet,
                   const char* what) {
  for (std::uint32_t s : symbols) {
    if (s < 1 || s > alphabet)
      fail(errc::value_out_of_range, std::string(what) + " symbol " + std::to_string(s) +
                                         " outside [1, " + std::to_string(alphabet) + "]");
  }
}

std::vector<std::uint32_t> parse_symbol_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(errc::parse_error, "bad word symbol '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SymbolWord::SymbolWord(std::vector<std::uint32_t> prefix, std::uint32_t alphabet)
    : SymbolWord(std::move(prefix), {}, alphabet) {}

SymbolWord::SymbolWord(std::vector<std::uint32_t> prefix, std::vector<std::uint32_t> tail,
                       std::uint32_t alphabet)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), alphabet_(alphabet) {
  if (alphabet_ < 1) fail(errc::value_out_of_range, "alphabet size must be >= 1");
  if (prefix_.empty()) fail(errc::value_out_of_range, "word prefix must be nonempty");
  check_symbols(prefix_, alphabet_, "prefix");
  check_symbols(tail_, alphabet_, "tail");
}

bool SymbolWord::has(std::size_t count) const { return infinite() || count <= prefix_.size(); }

std::uint32_t SymbolWord::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (tail_.empty())
    fail(errc::word_too_short, "finite word of length " + std::to_string(prefix_.size()) +
                                   " has no symbol at index " + std::to_string(i));
  return tail_[(i - prefix_.size()) % tail_.size()];
}

std::vector<std::uint32_t> SymbolWord::unfold(std::size_t count) const {
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(at(i));
  return out;
}

SymbolWord SymbolWord::parse(std::string_view text, std::uint32_t alphabet) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return SymbolWord(parse_symbol_list(text), alphabet);
  return SymbolWord(parse_symbol_list(text.substr(0, colon)),
                    parse_symbol_list(text.substr(colon + 1)), alphabet);
}

std::string SymbolWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(prefix_[i]);
  }
  if (!tail_.empty()) {
    s.push_back(':');
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(tail_[i]);
    }
  }
  return s;
}

SymbolWord transform_word(std::span<const std::uint32_t> row, const SymbolWord& word) {
  if (row.size() < word.alphabet())
    fail(errc::value_out_of_range, "index row shorter than the word alphabet");
  auto map_all = [&row](std::vector<std::uint32_t> symbols) {
    for (auto& s : symbols) s = row[s - 1];
    return symbols;
  };
  return SymbolWord(map_all(word.prefix()), map_all(word.tail()), word.alphabet());
}

SymbolWord concat_words(const SymbolWord& alpha, std::size_t n, const SymbolWord& beta) {
  if (alpha.alphabet() != beta.alphabet())
    fail(errc::alphabet_mismatch, "concatenation needs a common alphabet");
  if (n < 1) fail(errc::value_out_of_range, "concatenation needs n >= 1");
  if (!alpha.has(n))
    fail(errc::word_too_short,
         "word provides " + std::to_string(alpha.prefix_size()) + " symbols, need " + std::to_string(n));
  std::vector<std::uint32_t> prefix = alpha.unfold(n);
  prefix.insert(prefix.end(), beta.prefix().begin(), beta.prefix().end());
  return SymbolWord(std::move(prefix), beta.tail(), alpha.alphabet());
}

}  // namespace unconv
