#include "bundle_schema.h"

namespace hyperdoc::schema {

const std::vector<RecordSpec>& records() {
  static const std::vector<RecordSpec> kRecords = {
      {"concept", ".kb", true,
       {{"isa", "id-list"},
        {"lex", "id"},
        {"define", "property-list"},
        {"slot", "slot-value", true, true},
        {"parts", "id-list"},
        {"does", "id", true, true}}},
      {"task", ".kb", true,
       {{"isa", "id-list"}, {"lex", "id"}, {"define", "property-list"}, {"slot", "slot-value", true, true}}},
      {"instance", ".kb", true,
       {{"isa", "id-list"},
        {"lex", "id"},
        {"slot", "slot-value", true, true},
        {"parts", "id-list"},
        {"does", "id", true, true}}},
      {"action", ".kb", true,
       {{"kind", "action-kind"},
        {"text", "string"},
        {"verb", "symbol"},
        {"actor", "filler"},
        {"actee", "filler"},
        {"source", "filler"},
        {"destination", "filler"},
        {"manner", "filler"},
        {"steps", "id-list"}}},
      {"lexeme", ".lex", true,
       {{"lang", "symbol"},
        {"pos", "part-of-speech"},
        {"base", "raw"},
        {"denotes", "symbol"},
        {"basic-level", "bool"},
        {"abbreviation-of", "id"},
        {"category", "symbol"},
        {"form", "raw", true, true},
        {"prep", "raw", true, true}}},
      {"pack", ".lex", true,
       {{"a-words", "word-list"}, {"an-words", "word-list"}, {"contract", "contraction", false, true}}},
      {"rule", ".rule", true,
       {{"question", "question"},
        {"component", "id"},
        {"task", "id"},
        {"schema", "schema"},
        {"bullet", "bool"},
        {"unabbreviate", "bool"},
        {"conveys", "symbol-list"},
        {"followups", "question-list"},
        {"requires", "symbol-list"}}},
      {"preferences", ".rule", false,
       {{"attribute-order", "symbol-list"}, {"modifier-categories", "symbol-list"}}},
      {"expertise", ".model", true,
       {{"knows", "id-list-or-all"},
        {"knows-actions", "symbol-list-or-all"},
        {"contractions", "bool"},
        {"abbreviations", "bool"},
        {"lang", "symbol"}}},
      {"profile", ".profile", true,
       {{"max-words", "integer"},
        {"approved", "id-list-or-all-in-pack"},
        {"banned", "id-list"},
        {"banned-features", "feature-list"},
        {"lang", "symbol"}}},
  };
  return kRecords;
}

const RecordSpec* find_record(std::string_view extension, std::string_view kind) {
  for (const RecordSpec& r : records()) {
    if (r.extension == extension && r.kind == kind) return &r;
  }
  return nullptr;
}

const KeySpec* find_key(const RecordSpec& record, std::string_view key) {
  for (const KeySpec& k : record.keys) {
    if (k.key == key) return &k;
  }
  return nullptr;
}

}  // namespace hyperdoc::schema
