#include "nekrasov/half_int.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace nekrasov {

namespace {

std::int64_t parse_i64(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_i64(text, text));
  const std::int64_t num = parse_i64(text.substr(0, slash), text);
  const std::int64_t den = parse_i64(text.substr(slash + 1), text);
  if (den != 2) {
    throw std::invalid_argument("half-integer denominator must be 2: '" + std::string(text) + "'");
  }
  return from_doubled(num);
}

}  // namespace nekrasov
