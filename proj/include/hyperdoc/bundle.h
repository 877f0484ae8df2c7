#ifndef HYPERDOC_BUNDLE_H_
#define HYPERDOC_BUNDLE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hyperdoc/content_rule.h"
#include "hyperdoc/context.h"
#include "hyperdoc/kb.h"
#include "hyperdoc/lexicon.h"
#include "hyperdoc/standards.h"

namespace hyperdoc {

// Planner settings shared by the whole bundle.
struct Preferences {
  // Attribute order for distinguishing descriptions.
  std::vector<std::string> attribute_order = {"colour", "size", "location"};
  // Attribute categories realized as pre-nominal modifiers inside the
  // identity sentence ("a black Elgar AT-8000 DC power supply").
  std::vector<std::string> modifier_categories = {"description"};
  bool operator==(const Preferences&) const = default;
};

// Per-language orthographic data that overrides the pack's built-in lists.
struct PackSettings {
  std::string language;
  std::vector<std::string> a_words;   // take "a" despite a vowel letter
  std::vector<std::string> an_words;  // take "an" despite a consonant letter
  std::vector<std::pair<std::string, std::string>> contractions;
  bool operator==(const PackSettings&) const = default;
};

struct Diagnostic {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  std::string code;  // "parse", "dangling-reference", "cycle", ...
  SourceLocation where;
  std::string id;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct Bundle {
  KnowledgeBase kb;
  Lexicon lexicon;
  std::vector<ContentRule> rules;
  Preferences preferences;
  std::vector<ExpertiseModel> models;
  std::vector<StandardProfile> profiles;
  std::vector<PackSettings> pack_settings;

  std::vector<std::string> language_packs() const { return lexicon.languages(); }
  const ExpertiseModel* find_model(std::string_view id) const;
  const StandardProfile* find_profile(std::string_view id) const;
  const PackSettings* find_pack_settings(std::string_view language) const;
};

// One bundle file: path relative to the bundle root plus its UTF-8 text.
struct SourceFile {
  std::string path;
  std::string text;
};

struct LoadResult {
  std::shared_ptr<const Bundle> bundle;  // null when any error diagnostic exists
  std::vector<Diagnostic> diagnostics;   // errors and warnings

  bool ok() const { return bundle != nullptr; }
};

// Parses and validates an in-memory bundle.
LoadResult load_bundle(const std::vector<SourceFile>& files);
// Reads concepts/*.kb, instances/*.kb, lexicon/*.lex, rules/*.rule,
// models/*.model and standards/*.profile under `dir`.
LoadResult load_bundle_dir(const std::filesystem::path& dir);
std::vector<SourceFile> read_bundle_dir(const std::filesystem::path& dir);

// Every invariant violation in a parsed bundle. Warnings are content-standard
// findings; an empty error set means the bundle is valid.
std::vector<Diagnostic> validate_bundle(const Bundle& bundle);

// Canonical source form, one file per section.
std::vector<SourceFile> serialize_bundle(const Bundle& bundle);
void write_bundle_dir(const Bundle& bundle, const std::filesystem::path& dir);

// Structural equality used by the round-trip property.
bool structurally_equal(const Bundle& a, const Bundle& b);

}  // namespace hyperdoc

#endif  // HYPERDOC_BUNDLE_H_
