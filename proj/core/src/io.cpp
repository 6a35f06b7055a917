#include "unconv/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace unconv {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(text.substr(pos));
      break;
    }
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view tok, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(errc::parse_error, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return v;
}

// "key=value key=value ..." on one line.
std::uint64_t header_field(const std::vector<std::string_view>& tokens, std::string_view key) {
  for (std::string_view tok : tokens) {
    if (tok.substr(0, key.size()) == key && tok.size() > key.size() && tok[key.size()] == '=')
      return parse_u64(tok.substr(key.size() + 1), "header field");
  }
  fail(errc::parse_error, "missing header field '" + std::string(key) + "'");
}

}  // namespace

std::string point_to_text(const PadicInt& x) {
  return "p=" + std::to_string(x.prime()) + " K=" + std::to_string(x.precision()) + "\n" +
         x.digit_string() + "\n";
}

PadicInt point_from_text(std::string_view text) {
  auto lines = split(text, '\n');
  if (lines.size() < 2) fail(errc::parse_error, "point text needs a header and a digit line");
  auto header = split(trim(lines[0]), ' ');
  std::uint64_t p = header_field(header, "p");
  std::uint64_t k = header_field(header, "K");
  PadicInt x = PadicInt::parse_digits(p, trim(lines[1]));
  if (static_cast<std::uint64_t>(x.precision()) != k)
    fail(errc::parse_error, "digit count differs from the declared precision");
  return x;
}

std::string sample_to_text(const LimitSetSample& sample) {
  std::ostringstream os;
  os << "p=" << sample.prime << " K=" << sample.precision << " depth=" << sample.depth
     << " N=" << sample.alphabet << " M=" << sample.rows_m << " L=" << sample.cols_l
     << " count=" << sample.points.size() << "\n";
  for (std::string_view group : split(sample.family_desc, ';')) {
    os << "family " << group << "\n";
  }
  for (const auto& pt : sample.points) os << pt.digit_string() << "\n";
  return os.str();
}

LimitSetSample sample_from_text(std::string_view text) {
  auto lines = split(text, '\n');
  if (lines.empty()) fail(errc::parse_error, "empty sample text");
  auto header = split(trim(lines[0]), ' ');
  LimitSetSample sample;
  sample.prime = header_field(header, "p");
  sample.precision = static_cast<int>(header_field(header, "K"));
  sample.depth = static_cast<int>(header_field(header, "depth"));
  sample.alphabet = static_cast<std::uint32_t>(header_field(header, "N"));
  sample.rows_m = header_field(header, "M");
  sample.cols_l = header_field(header, "L");
  const std::uint64_t count = header_field(header, "count");

  std::size_t line = 1;
  std::string desc;
  while (line < lines.size() && trim(lines[line]).substr(0, 6) == "family") {
    std::string_view body = trim(trim(lines[line]).substr(6));
    if (!desc.empty()) desc.push_back(';');
    desc += std::string(body);
    ++line;
  }
  sample.family_desc = desc;
  if (desc.empty() || split(desc, ';').size() != sample.rows_m)
    fail(errc::parse_error, "family description lines differ from M");

  for (; line < lines.size(); ++line) {
    std::string_view body = trim(lines[line]);
    if (body.empty()) continue;
    PadicInt pt = PadicInt::parse_digits(sample.prime, body);
    if (pt.precision() != sample.precision)
      fail(errc::parse_error, "sample point precision differs from the header");
    sample.points.push_back(std::move(pt));
  }
  if (sample.points.size() != count)
    fail(errc::parse_error, "sample point count differs from the header");
  return sample;
}

double monna_value(const PadicInt& x) {
  double acc = 0.0;
  const double p = static_cast<double>(x.prime());
  for (int i = x.precision() - 1; i >= 0; --i) {
    acc = (acc + static_cast<double>(x.digit(i))) / p;
  }
  return acc;
}

std::string monna_to_text(const LimitSetSample& sample) {
  std::ostringstream os;
  os << "p=" << sample.prime << " K=" << sample.precision << " depth=" << sample.depth
     << " count=" << sample.points.size() << " format=monna\n";
  char buf[64];
  for (const auto& pt : sample.points) {
    std::snprintf(buf, sizeof buf, "%.17g", monna_value(pt));
    os << buf << "\n";
  }
  return os.str();
}

std::string distance_matrix_to_text(const LimitSetSample& sample) {
  std::ostringstream os;
  os << "p=" << sample.prime << " K=" << sample.precision << " count=" << sample.points.size()
     << " entry=valuation_exponent\n";
  for (const auto& x : sample.points) {
    for (std::size_t j = 0; j < sample.points.size(); ++j) {
      if (j) os << ' ';
      os << (x - sample.points[j]).valuation().exponent;
    }
    os << "\n";
  }
  return os.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::validation_error, "cannot open '" + tmp + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) fail(errc::validation_error, "short write to '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace unconv
