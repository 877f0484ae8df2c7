#include "hyperdoc/lexicon.h"

#include <algorithm>
#include <set>

namespace hyperdoc {

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kAdjective: return "adjective";
    case PartOfSpeech::kAdverb: return "adverb";
  }
  return "";
}

std::optional<PartOfSpeech> parse_part_of_speech(std::string_view s) {
  for (PartOfSpeech p : {PartOfSpeech::kNoun, PartOfSpeech::kVerb, PartOfSpeech::kAdjective,
                         PartOfSpeech::kAdverb}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

bool LexicalEntry::operator==(const LexicalEntry& o) const {
  return id == o.id && language == o.language && part_of_speech == o.part_of_speech &&
         base_form == o.base_form && irregular_forms == o.irregular_forms &&
         denotes == o.denotes && basic_level == o.basic_level &&
         abbreviation_of == o.abbreviation_of && attribute_category == o.attribute_category &&
         role_prepositions == o.role_prepositions;
}

Lexicon::Lexicon(std::vector<LexicalEntry> entries) : entries_(std::move(entries)) {
  for (size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].id, i);
}

const LexicalEntry* Lexicon::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<const LexicalEntry*> Lexicon::denoting(std::string_view language,
                                                   std::string_view symbol,
                                                   std::optional<PartOfSpeech> pos) const {
  std::vector<const LexicalEntry*> out;
  for (const LexicalEntry& e : entries_) {
    if (e.language == language && e.denotes == symbol && (!pos || e.part_of_speech == *pos)) {
      out.push_back(&e);
    }
  }
  return out;
}

std::vector<std::string> Lexicon::languages() const {
  std::set<std::string> langs;
  for (const LexicalEntry& e : entries_) langs.insert(e.language);
  return {langs.begin(), langs.end()};
}

std::vector<const LexicalEntry*> nouns_for(const Lexicon& lexicon, const Frame& frame,
                                           std::string_view language) {
  std::vector<const LexicalEntry*> out;
  if (const LexicalEntry* anchor = lexicon.find(frame.lexical_anchor);
      anchor && anchor->language == language && anchor->part_of_speech == PartOfSpeech::kNoun) {
    out.push_back(anchor);
  }
  for (const LexicalEntry* e : lexicon.denoting(language, frame.id, PartOfSpeech::kNoun)) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

}  // namespace hyperdoc
