#ifndef HYPERDOC_STANDARDS_H_
#define HYPERDOC_STANDARDS_H_

#include <set>
#include <string>
#include <vector>

#include "hyperdoc/kb.h"
#include "hyperdoc/spans.h"

namespace hyperdoc {

class Lexicon;

inline constexpr const char* kGerundForm = "gerund-form";
inline constexpr const char* kComplexTense = "complex-tense";
inline constexpr const char* kPassivePattern = "passive-pattern";

struct StandardProfile {
  std::string id = "default";
  int max_sentence_words = 20;
  bool approve_all_in_pack = true;
  std::set<std::string> approved_lexemes;
  std::set<std::string> banned_lexemes;
  std::set<std::string> banned_features = {kGerundForm, kComplexTense, kPassivePattern};
  std::string language = "en";
  SourceLocation where;

  bool operator==(const StandardProfile& o) const;
};

struct Violation {
  enum class Severity { kError, kAdvisory };
  std::string rule;  // "max-sentence-words", "unapproved-word", "banned-word", feature name
  int sentence = 0;  // zero-based
  std::string token;
  Severity severity = Severity::kError;
  std::string message;
};

// Checks spans against a writing standard. Canned spans only ever produce
// advisory violations. `lexicon` (optional) supplies the approved surface
// vocabulary for text that carries no lexeme tags.
std::vector<Violation> check_text(const std::vector<AnnotatedSpan>& spans,
                                  const StandardProfile& profile, const Lexicon* lexicon = nullptr);

// "error [rule] sentence N at 'token': message".
std::string to_string(const Violation& v);

// Splits raw text into external-provenance spans for check_text.
std::vector<AnnotatedSpan> spans_from_text(const std::string& text);

}  // namespace hyperdoc

#endif  // HYPERDOC_STANDARDS_H_
