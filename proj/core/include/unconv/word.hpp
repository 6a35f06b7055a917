#pragma once

// Words over the alphabet [1, N]. A word is a finite prefix plus an optional
// periodic tail; prefix + tail denotes an eventually periodic infinite
// sequence, which covers every sequence the limit constructions consume.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unconv/errors.hpp"

namespace unconv {

class SymbolWord {
 public:
  SymbolWord(std::vector<std::uint32_t> prefix, std::uint32_t alphabet);
  SymbolWord(std::vector<std::uint32_t> prefix, std::vector<std::uint32_t> tail,
             std::uint32_t alphabet);

  std::uint32_t alphabet() const { return alphabet_; }
  bool infinite() const { return !tail_.empty(); }
  std::size_t prefix_size() const { return prefix_.size(); }
  const std::vector<std::uint32_t>& prefix() const { return prefix_; }
  const std::vector<std::uint32_t>& tail() const { return tail_; }

  bool has(std::size_t count) const;      // can supply `count` symbols
  std::uint32_t at(std::size_t i) const;  // 0-based; unfolds the tail
  std::vector<std::uint32_t> unfold(std::size_t count) const;

  // "1,2" or "1,2:2,1" (prefix : periodic tail).
  static SymbolWord parse(std::string_view text, std::uint32_t alphabet);
  std::string str() const;

  bool operator==(const SymbolWord&) const = default;  // structural equality

 private:
  std::vector<std::uint32_t> prefix_, tail_;
  std::uint32_t alphabet_ = 1;
};

// Symbol-wise image through an index map given as a lookup row
// (row[k-1] = image of symbol k).
SymbolWord transform_word(std::span<const std::uint32_t> row, const SymbolWord& word);

// First n symbols of alpha followed by all of beta (prefix and tail).
SymbolWord concat_words(const SymbolWord& alpha, std::size_t n, const SymbolWord& beta);

}  // namespace unconv
