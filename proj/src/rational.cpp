#include "rootcfg/rational.hpp"

#include <algorithm>
#include <cctype>

namespace rootcfg {

std::string to_string(const Rat& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += '/';
    out += denominator(x).str();
  }
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view token) {
  bool negative = false;
  if (!token.empty() && token.front() == '-') {
    negative = true;
    token.remove_prefix(1);
  }

  std::string_view head = token;
  std::string_view tail;
  char sep = '\0';
  if (auto pos = token.find_first_of("/."); pos != std::string_view::npos) {
    sep = token[pos];
    head = token.substr(0, pos);
    tail = token.substr(pos + 1);
  }
  if (!all_digits(head) || (sep != '\0' && !all_digits(tail))) {
    return std::nullopt;
  }

  Rat value;
  if (sep == '/') {
    Int d{std::string(tail)};
    if (d == 0) return std::nullopt;
    value = Rat(Int{std::string(head)}, d);
  } else if (sep == '.') {
    // a.b == (a * 10^k + b) / 10^k with k fractional digits
    Int scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    value = Rat(Int{std::string(head)} * scale + Int{std::string(tail)}, scale);
  } else {
    value = Rat(Int{std::string(head)});
  }
  if (negative) value = -value;
  return value;
}

}  // namespace rootcfg
