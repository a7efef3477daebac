#include "gfroots/polytext.hpp"

#include <charconv>
#include <vector>

#include "gfroots/error.hpp"

namespace gfroots {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::uint32_t parse_hex_u32(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
  }
  if (s.empty()) throw Error(ErrorKind::Parse, "empty hex value");
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, 16);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorKind::Parse, "hex value too large: '" + std::string(s) + "'");
  }
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::Parse, "malformed hex value: '" + std::string(s) + "'");
  }
  return value;
}

Poly parse_poly_text(std::string_view text, const Field& field) {
  std::vector<Element> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    const std::uint32_t v = parse_hex_u32(item);
    if (!field.contains(Element{v})) {
      throw Error(ErrorKind::Parse, "coefficient " + std::string(trim(item)) +
                                        " does not fit in GF(2^" +
                                        std::to_string(field.m()) + ")");
    }
    coeffs.emplace_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Poly(std::move(coeffs));
}

std::string format_hex(Element e) {
  char buf[16];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.value, 16);
  return std::string(buf, ptr);
}

std::string format_poly_text(const Poly& p) {
  std::string out;
  for (Element c : p.coeffs()) {
    if (!out.empty()) out += ',';
    out += format_hex(c);
  }
  return out;
}

std::string format_log(Element e, const Field& field) {
  if (e.is_zero()) return "0";
  return "a^" + std::to_string(field.log(e));
}

}  // namespace gfroots
