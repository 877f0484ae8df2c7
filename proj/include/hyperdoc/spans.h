#ifndef HYPERDOC_SPANS_H_
#define HYPERDOC_SPANS_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperdoc/kb.h"

namespace hyperdoc {

enum class Provenance {
  kGenerated,  // produced by the grammar; feature bundles are exact
  kCanned,     // author text from hybrid action representations
  kExternal,   // raw text given to the checker
};

struct Annotation {
  enum class Kind { kPlain, kEntity, kAction };
  Kind kind = Kind::kPlain;
  Id target;           // entity, or the component an action applies to
  std::string action;  // action symbol for kAction

  static Annotation plain() { return {}; }
  static Annotation entity(Id id) { return {Kind::kEntity, std::move(id), ""}; }
  static Annotation action_link(std::string act, Id component) {
    return {Kind::kAction, std::move(component), std::move(act)};
  }
  bool operator==(const Annotation&) const = default;
};

struct Formatting {
  std::optional<int> bullet_index;
  bool emphasis = false;
  // Bullet item that is a noun-phrase fragment, not a sentence.
  bool fragment = false;
  bool operator==(const Formatting&) const = default;
};

struct AnnotatedSpan {
  std::string text;
  Annotation annotation;
  Formatting formatting;
  Provenance provenance = Provenance::kGenerated;
  std::string lexeme;              // generating lexeme, if any
  std::vector<std::string> modifier_lexemes;  // linked NPs: prenominal words
  bool literal = false;            // KB literal (name, number, code)
  std::set<std::string> features;  // e.g. "gerund-form"

  bool operator==(const AnnotatedSpan&) const = default;
};

// Concatenated text; bullet items go on their own "- " lines.
std::string plain_text(const std::vector<AnnotatedSpan>& spans);

}  // namespace hyperdoc

#endif  // HYPERDOC_SPANS_H_
