#include <algorithm>
#include <fstream>
#include <sstream>

#include "overfix/support/error.hpp"
#include "overfix/support/int128.hpp"
#include "overfix/support/text.hpp"

namespace overfix {

std::string toString(Int v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // Work on the negative side so the minimum value does not overflow.
  std::string digits;
  Int x = negative ? v : -v;
  while (x != 0) {
    int d = static_cast<int>(-(x % 10));
    digits.push_back(static_cast<char>('0' + d));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<Int> parseInt(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return std::nullopt;
  Int value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    if (value > kIntInfinity) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

Int floorSqrt(Int n) {
  if (n < 0) throw Error("floorSqrt: NegativeInput");
  if (n < 2) return n;
  // Newton iteration on integers, started above the root.
  Int x = n;
  Int y = (x + 1) / 2;
  if (n > (static_cast<Int>(1) << 100)) {
    x = static_cast<Int>(1) << 64;
    y = (x + n / x) / 2;
  }
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

Int satAdd(Int a, Int b) { return clampInf(clampInf(a) + clampInf(b)); }

Int satMul(Int a, Int b) {
  a = clampInf(a);
  b = clampInf(b);
  if (a == 0 || b == 0) return 0;
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    return ((a < 0) != (b < 0)) ? -kIntInfinity : kIntInfinity;
  }
  return clampInf(r);
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1aHex(std::string_view data) {
  static const char* kHex = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<std::string> splitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return std::string(s.substr(b, e - b));
}

bool startsWith(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

std::size_t countNonBlankLines(std::string_view text) {
  std::size_t n = 0;
  for (const auto& line : splitLines(text)) {
    if (!trim(line).empty()) ++n;
  }
  return n;
}

}  // namespace overfix
