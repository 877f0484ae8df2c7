#ifndef HYPERDOC_LEXICON_H_
#define HYPERDOC_LEXICON_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperdoc/kb.h"

namespace hyperdoc {

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb };
std::string_view to_string(PartOfSpeech pos);
std::optional<PartOfSpeech> parse_part_of_speech(std::string_view s);

struct LexicalEntry {
  std::string id;
  std::string language = "en";
  PartOfSpeech part_of_speech = PartOfSpeech::kNoun;
  std::string base_form;
  std::map<std::string, std::string> irregular_forms;  // "plural" -> "chassis"
  std::string denotes;           // concept/instance id, attribute, value or action symbol
  bool basic_level = false;
  std::string abbreviation_of;   // lexeme id, empty if none
  std::string attribute_category;
  std::map<std::string, std::string> role_prepositions;  // verbs: "destination" -> "on"
  SourceLocation where;

  bool is_abbreviation() const { return !abbreviation_of.empty(); }
  bool operator==(const LexicalEntry& o) const;
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<LexicalEntry> entries);

  const LexicalEntry* find(std::string_view id) const;
  std::span<const LexicalEntry> entries() const { return entries_; }

  // Entries of the pack that denote `symbol`, in declaration order.
  std::vector<const LexicalEntry*> denoting(std::string_view language, std::string_view symbol,
                                            std::optional<PartOfSpeech> pos = std::nullopt) const;

  std::vector<std::string> languages() const;

 private:
  std::vector<LexicalEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

// Nouns naming a node in one language: its lexical anchor first, then the
// other nouns denoting it in lexicon order.
std::vector<const LexicalEntry*> nouns_for(const Lexicon& lexicon, const Frame& frame,
                                           std::string_view language);

}  // namespace hyperdoc

#endif  // HYPERDOC_LEXICON_H_
