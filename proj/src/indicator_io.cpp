#include "doerfler/indicator_io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "doerfler/error.hpp"

namespace doerfler {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t byteswap64(std::uint64_t v) {
  std::uint64_t r = 0;
  for (int i = 0; i < 8; ++i) {
    r = (r << 8) | (v & 0xff);
    v >>= 8;
  }
  return r;
}

}  // namespace

IndicatorFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".f64" ? IndicatorFormat::kBinary : IndicatorFormat::kText;
}

std::vector<double> parse_indicator_text(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;

    std::string_view token = line;
    if (token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      parse_error(line_no, "expected one decimal number, got '" + std::string(line) + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw Error(ErrorKind::kParseError, "indicator file holds no values");
  return values;
}

std::vector<double> parse_indicator_binary(std::span<const std::byte> bytes) {
  if (bytes.empty()) throw Error(ErrorKind::kParseError, "indicator file holds no values");
  if (bytes.size() % sizeof(double) != 0) {
    throw Error(ErrorKind::kParseError, "binary indicator file length is not a multiple of 8");
  }
  std::vector<double> values(bytes.size() / sizeof(double));
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t raw = 0;
    std::memcpy(&raw, bytes.data() + i * sizeof(double), sizeof raw);
    if constexpr (std::endian::native == std::endian::big) raw = byteswap64(raw);
    values[i] = std::bit_cast<double>(raw);
  }
  return values;
}

IndicatorVector read_indicator_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kResourceError, "cannot open '" + path.string() + "'");
  const std::string content{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::kResourceError, "cannot read '" + path.string() + "'");

  if (format_for(path) == IndicatorFormat::kBinary) {
    return IndicatorVector(parse_indicator_binary(
        std::span<const std::byte>(reinterpret_cast<const std::byte*>(content.data()),
                                   content.size())));
  }
  return IndicatorVector(parse_indicator_text(content));
}

void write_indicator_file(const std::filesystem::path& path, std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kResourceError, "cannot create '" + path.string() + "'");
  if (format_for(path) == IndicatorFormat::kBinary) {
    for (double v : values) {
      auto raw = std::bit_cast<std::uint64_t>(v);
      if constexpr (std::endian::native == std::endian::big) raw = byteswap64(raw);
      out.write(reinterpret_cast<const char*>(&raw), sizeof raw);
    }
  } else {
    char buf[32];
    for (double v : values) {
      const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
      out.write(buf, end - buf);
      out.put('\n');
    }
  }
  if (!out) throw Error(ErrorKind::kResourceError, "cannot write '" + path.string() + "'");
}

void write_marked_indices(const std::filesystem::path& path, std::span<const std::size_t> marked) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kResourceError, "cannot create '" + path.string() + "'");
  for (std::size_t j : marked) out << j << '\n';
  if (!out) throw Error(ErrorKind::kResourceError, "cannot write '" + path.string() + "'");
}

}  // namespace doerfler
