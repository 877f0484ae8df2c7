#ifndef HYPERDOC_SRC_TEXT_UTIL_H_
#define HYPERDOC_SRC_TEXT_UTIL_H_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdoc::text {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside double quotes and square brackets; trims pieces and
// drops empty ones.
inline std::vector<std::string> split_top_level(std::string_view s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (quoted) {
      cur += c;
      if (c == '\\' && i + 1 < s.size()) cur += s[++i];
      else if (c == '"') quoted = false;
      continue;
    }
    if (c == '"') quoted = true;
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      auto t = trim(cur);
      if (!t.empty()) out.emplace_back(t);
      cur.clear();
      continue;
    }
    cur += c;
  }
  auto t = trim(cur);
  if (!t.empty()) out.emplace_back(t);
  return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '\'' ||
         (static_cast<unsigned char>(c) & 0x80);
}

// Whitespace-separated words with no alphanumeric content dropped.
inline std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    bool alnum = false;
    for (char c : cur) alnum |= std::isalnum(static_cast<unsigned char>(c)) != 0;
    if (alnum) out.push_back(cur);
    cur.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) flush();
    else cur += c;
  }
  flush();
  return out;
}

}  // namespace hyperdoc::text

#endif  // HYPERDOC_SRC_TEXT_UTIL_H_
