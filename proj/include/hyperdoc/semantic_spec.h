#ifndef HYPERDOC_SEMANTIC_SPEC_H_
#define HYPERDOC_SEMANTIC_SPEC_H_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperdoc/kb.h"

namespace hyperdoc {

enum class Process { kIdentity, kAttributive, kLocative, kPartsPossession, kImperativeAction };
std::string_view to_string(Process p);

enum class Determiner { kNone, kIndefinite, kDefinite };
std::string_view to_string(Determiner d);

enum class Mood { kDeclarative, kImperative, kInfinitive };

struct ReferringPlan {
  Id referent;
  std::string head_lexeme;
  Id head_concept;                   // node the head lexeme denotes
  std::vector<Property> attributes;  // distinguishing modifiers, in order added
  bool pronoun = false;
  Determiner determiner = Determiner::kDefinite;
  std::vector<Id> distractors;  // focus members sharing the head category
  bool distinguishing = true;

  bool operator==(const ReferringPlan&) const = default;
};

struct SemanticSpec;

// Filler of an attribute or case role.
struct ValuePlan {
  enum class Kind { kWord, kLiteral, kReferences, kClause };
  Kind kind = Kind::kLiteral;
  std::string lexeme;                // kWord
  std::string text;                  // kLiteral
  bool canned = false;               // TCF text filler, realized verbatim
  std::vector<ReferringPlan> refs;   // kReferences, conjoined
  std::shared_ptr<const SemanticSpec> clause;  // kClause (infinitive)

  bool operator==(const ValuePlan& o) const;
};

struct Relation {
  std::string attribute;
  std::string lexeme;  // attribute lexeme (noun, or verb for "connects to")
  ValuePlan value;
  bool operator==(const Relation&) const = default;
};

struct RoleArg {
  Role role = Role::kActee;
  ValuePlan value;
  std::string preposition;  // empty for actee and manner
  bool operator==(const RoleArg&) const = default;
};

struct SemanticSpec {
  std::string node;
  Process process = Process::kIdentity;
  Mood mood = Mood::kDeclarative;
  std::optional<ReferringPlan> domain;
  std::optional<ReferringPlan> range;  // Identity: predicative NP; Locative: container
  std::vector<Relation> relations;     // Identity: modifiers on range; Attributive: predications
  std::vector<ReferringPlan> items;    // PartsPossession
  std::string preposition;             // Locative
  // ImperativeAction.
  std::string verb_lexeme;
  std::string action;
  Id action_target;
  std::vector<RoleArg> roles;
  // Layout.
  bool bullet = false;  // PartsPossession: list items as bullets
  std::optional<int> bullet_index;

  bool operator==(const SemanticSpec&) const = default;
};

// Canned or EKR text: verbatim fragments with embedded references.
struct CannedPlan {
  struct Segment {
    std::string text;
    std::optional<ReferringPlan> ref;
    bool operator==(const Segment&) const = default;
  };
  std::string node;
  std::vector<Segment> segments;
  std::optional<int> bullet_index;
  bool operator==(const CannedPlan&) const = default;
};

using TextPlan = std::variant<SemanticSpec, CannedPlan>;

class Lexicon;

// SPL-style rendering used by traces; with a lexicon, heads print as words.
std::string to_spl(const TextPlan& plan, const Lexicon* lexicon = nullptr);

}  // namespace hyperdoc

#endif  // HYPERDOC_SEMANTIC_SPEC_H_
