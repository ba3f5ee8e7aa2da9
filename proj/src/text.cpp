#include "rlcm/text.hpp"

#include <cctype>  // for isspace, isdigit

#include "rlcm/error.hpp"

namespace rlcm {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth         = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      if (--depth < 0) {
        throw ParseError("unbalanced '" + std::string(1, c) + "'", i);
      }
    } else if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) {
    throw ParseError("unbalanced brackets", s.size());
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::string_view unwrap(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError("expected '" + std::string(1, open) + "...'"
                         + std::string(1, close) + "' in '" + std::string(s) + "'",
                     0);
  }
  return s.substr(1, s.size() - 2);
}

i64 parse_int(std::string_view s) {
  s             = trim(s);
  std::size_t i = 0;
  bool neg      = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) {
    throw ParseError("expected an integer in '" + std::string(s) + "'", i);
  }
  i64 v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("expected an integer in '" + std::string(s) + "'", i);
    }
    v = checked_add(checked_mul(v, 10), s[i] - '0');
  }
  return neg ? -v : v;
}

std::string join(std::vector<std::string> const& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

}  // namespace rlcm
