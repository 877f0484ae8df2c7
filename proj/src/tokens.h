#ifndef HYPERDOC_SRC_TOKENS_H_
#define HYPERDOC_SRC_TOKENS_H_

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdoc::tokens {

inline bool is_closing(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == ')' || c == '?' || c == '!';
}

inline bool is_terminal(char c) { return c == '.' || c == '?' || c == '!' || c == ':'; }

inline bool has_alnum(std::string_view s) {
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

// Whitespace-separated words with a leading "(" and trailing punctuation
// split off as tokens of their own.
inline std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    std::string_view w = s.substr(i, j - i);
    i = j;
    if (w.empty()) continue;
    while (!w.empty() && w.front() == '(') {
      out.emplace_back("(");
      w.remove_prefix(1);
    }
    std::vector<std::string> tail;
    while (!w.empty() && is_closing(w.back())) {
      tail.emplace_back(1, w.back());
      w.remove_suffix(1);
    }
    if (!w.empty()) out.emplace_back(w);
    out.insert(out.end(), tail.rbegin(), tail.rend());
  }
  return out;
}

// Like split(), but keeps the inner words of the phrase together.
inline std::vector<std::string> split_phrase(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && s.front() == '(') {
    out.emplace_back("(");
    s.remove_prefix(1);
  }
  std::vector<std::string> tail;
  while (!s.empty() && is_closing(s.back())) {
    tail.emplace_back(1, s.back());
    s.remove_suffix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty()) out.emplace_back(s);
  out.insert(out.end(), tail.rbegin(), tail.rend());
  return out;
}

}  // namespace hyperdoc::tokens

#endif  // HYPERDOC_SRC_TOKENS_H_
