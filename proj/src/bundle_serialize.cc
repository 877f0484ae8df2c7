#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "hyperdoc/bundle.h"
#include "hyperdoc/error.h"
#include "text_util.h"

namespace hyperdoc {
namespace {

std::string quote(const std::string& s) { return SlotValue::text(s).to_source(); }

std::string refs(const std::vector<Id>& ids) {
  std::vector<std::string> out;
  for (const Id& id : ids) out.push_back("@" + id);
  return text::join(out, ", ");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string filler_source(const Filler& f) {
  switch (f.kind) {
    case Filler::Kind::kSelf: return "@self";
    case Filler::Kind::kParent: return "@parent";
    case Filler::Kind::kText: return quote(f.value);
    case Filler::Kind::kEntity: return "@" + f.value;
  }
  return "";
}

void write_frame(std::ostream& os, const Frame& f) {
  const char* kind = f.kind == NodeKind::kTask       ? "task"
                     : f.kind == NodeKind::kInstance ? "instance"
                                                     : "concept";
  os << kind << " " << f.id << "\n";
  if (!f.isa.empty()) os << "  isa: " << refs(f.isa) << "\n";
  if (!f.lexical_anchor.empty()) os << "  lex: " << f.lexical_anchor << "\n";
  if (!f.defining.empty()) {
    std::vector<std::string> props;
    for (const Property& p : f.defining) props.push_back(p.attribute + "=" + p.value.to_source());
    os << "  define: " << text::join(props, ", ") << "\n";
  }
  for (const Property& p : f.slots) os << "  slot " << p.attribute << ": " << p.value.to_source() << "\n";
  if (!f.parts.empty()) os << "  parts: " << refs(f.parts) << "\n";
  for (const auto& [sym, id] : f.actions) os << "  does " << sym << ": @" << id << "\n";
  os << "\n";
}

void write_action(std::ostream& os, const ActionRep& a) {
  os << "action " << a.id << "\n";
  os << "  kind: " << to_string(a.kind) << "\n";
  if (a.kind == ActionKind::kEkr) os << "  text: " << quote(ekr_source(a.segments)) << "\n";
  else if (!a.text.empty()) os << "  text: " << quote(a.text) << "\n";
  if (!a.verb.empty()) os << "  verb: " << a.verb << "\n";
  for (const auto& [role, filler] : a.roles) os << "  " << to_string(role) << ": " << filler_source(filler) << "\n";
  if (!a.steps.empty()) os << "  steps: " << refs(a.steps) << "\n";
  os << "\n";
}

void write_lexeme(std::ostream& os, const LexicalEntry& e) {
  os << "lexeme " << e.id << "\n";
  os << "  lang: " << e.language << "\n";
  os << "  pos: " << to_string(e.part_of_speech) << "\n";
  os << "  base: " << e.base_form << "\n";
  os << "  denotes: " << e.denotes << "\n";
  if (e.basic_level) os << "  basic-level: yes\n";
  if (e.is_abbreviation()) os << "  abbreviation-of: " << e.abbreviation_of << "\n";
  if (!e.attribute_category.empty()) os << "  category: " << e.attribute_category << "\n";
  for (const auto& [feature, form] : e.irregular_forms) os << "  form " << feature << ": " << form << "\n";
  for (const auto& [role, prep] : e.role_prepositions) os << "  prep " << role << ": " << prep << "\n";
  os << "\n";
}

void write_rule(std::ostream& os, const ContentRule& r) {
  os << "rule " << r.id << "\n";
  os << "  question: " << to_string(r.question) << "\n";
  os << "  component: " << r.component_class << "\n";
  os << "  task: " << r.task_class << "\n";
  os << "  schema: " << to_string(r.schema) << "\n";
  os << "  bullet: " << yes_no(r.bullet) << "\n";
  os << "  unabbreviate: " << yes_no(r.unabbreviate) << "\n";
  if (!r.conveyed_attributes.empty()) os << "  conveys: " << text::join(r.conveyed_attributes, ", ") << "\n";
  if (!r.candidate_followups.empty()) {
    std::vector<std::string> qs;
    for (Question q : r.candidate_followups) qs.emplace_back(to_string(q));
    os << "  followups: " << text::join(qs, ", ") << "\n";
  }
  if (!r.required_attributes.empty()) os << "  requires: " << text::join(r.required_attributes, ", ") << "\n";
  os << "\n";
}

void write_model(std::ostream& os, const ExpertiseModel& m) {
  os << "expertise " << m.id << "\n";
  os << "  lang: " << m.language << "\n";
  if (m.knows_all_lexemes) os << "  knows: *\n";
  else if (!m.known_lexemes.empty()) os << "  knows: " << text::join({m.known_lexemes.begin(), m.known_lexemes.end()}, ", ") << "\n";
  if (m.knows_all_actions) os << "  knows-actions: *\n";
  else if (!m.known_actions.empty()) os << "  knows-actions: " << text::join({m.known_actions.begin(), m.known_actions.end()}, ", ") << "\n";
  os << "  contractions: " << yes_no(m.style.contractions) << "\n";
  os << "  abbreviations: " << yes_no(m.style.allow_abbreviations) << "\n";
  os << "\n";
}

void write_profile(std::ostream& os, const StandardProfile& p) {
  os << "profile " << p.id << "\n";
  os << "  lang: " << p.language << "\n";
  os << "  max-words: " << p.max_sentence_words << "\n";
  if (p.approve_all_in_pack) os << "  approved: all-in-pack\n";
  else os << "  approved: " << text::join({p.approved_lexemes.begin(), p.approved_lexemes.end()}, ", ") << "\n";
  if (!p.banned_lexemes.empty()) os << "  banned: " << text::join({p.banned_lexemes.begin(), p.banned_lexemes.end()}, ", ") << "\n";
  os << "  banned-features: " << text::join({p.banned_features.begin(), p.banned_features.end()}, ", ") << "\n";
  os << "\n";
}

}  // namespace

std::vector<SourceFile> serialize_bundle(const Bundle& bundle) {
  std::ostringstream concepts, instances, rules, models, profiles;
  std::map<std::string, std::ostringstream> lexicon;
  for (const Frame& f : bundle.kb.nodes()) write_frame(f.kind == NodeKind::kInstance ? instances : concepts, f);
  for (const ActionRep& a : bundle.kb.actions()) write_action(concepts, a);
  for (const PackSettings& p : bundle.pack_settings) {
    std::ostream& os = lexicon[p.language];
    os << "pack " << p.language << "\n";
    if (!p.a_words.empty()) os << "  a-words: " << text::join(p.a_words, ", ") << "\n";
    if (!p.an_words.empty()) os << "  an-words: " << text::join(p.an_words, ", ") << "\n";
    for (const auto& [full, contracted] : p.contractions) os << "  contract: " << full << " => " << contracted << "\n";
    os << "\n";
  }
  for (const LexicalEntry& e : bundle.lexicon.entries()) write_lexeme(lexicon[e.language], e);
  rules << "preferences\n"
        << "  attribute-order: " << text::join(bundle.preferences.attribute_order, ", ") << "\n"
        << "  modifier-categories: " << text::join(bundle.preferences.modifier_categories, ", ") << "\n\n";
  for (const ContentRule& r : bundle.rules) write_rule(rules, r);
  for (const ExpertiseModel& m : bundle.models) write_model(models, m);
  for (const StandardProfile& p : bundle.profiles) write_profile(profiles, p);

  std::vector<SourceFile> out;
  auto add = [&out](std::string path, const std::ostringstream& os) {
    if (!os.str().empty()) out.push_back({std::move(path), os.str()});
  };
  add("concepts/all.kb", concepts);
  add("instances/all.kb", instances);
  for (const auto& [lang, os] : lexicon) add("lexicon/" + lang + ".lex", os);
  add("rules/all.rule", rules);
  add("models/all.model", models);
  add("standards/all.profile", profiles);
  return out;
}

void write_bundle_dir(const Bundle& bundle, const std::filesystem::path& dir) {
  for (const SourceFile& f : serialize_bundle(bundle)) {
    const std::filesystem::path path = dir / f.path;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << f.text)) {
      throw Error(ErrorCode::kIo, path.string(), "cannot write '" + path.string() + "'");
    }
  }
}

namespace {

template <typename T, typename Key>
bool same_by_id(const std::vector<T>& a, const std::vector<T>& b, Key key) {
  if (a.size() != b.size()) return false;
  std::map<std::string, const T*> index;
  for (const T& x : a) index[key(x)] = &x;
  for (const T& y : b) {
    auto it = index.find(key(y));
    if (it == index.end() || !(*it->second == y)) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const Bundle& a, const Bundle& b) {
  auto frames = [](const KnowledgeBase& kb) { return std::vector<Frame>(kb.nodes().begin(), kb.nodes().end()); };
  auto actions = [](const KnowledgeBase& kb) {
    return std::vector<ActionRep>(kb.actions().begin(), kb.actions().end());
  };
  auto id = [](const auto& x) { return x.id; };
  // Lexeme order within a language is significant (it breaks lexical-choice ties).
  auto lexemes_by_language = [](const Lexicon& lex) {
    std::map<std::string, std::vector<LexicalEntry>> out;
    for (const LexicalEntry& e : lex.entries()) out[e.language].push_back(e);
    return out;
  };
  auto packs = [](std::vector<PackSettings> p) {
    std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.language < y.language; });
    return p;
  };
  return same_by_id(frames(a.kb), frames(b.kb), id) && same_by_id(actions(a.kb), actions(b.kb), id) &&
         lexemes_by_language(a.lexicon) == lexemes_by_language(b.lexicon) &&
         same_by_id(a.rules, b.rules, id) && a.preferences == b.preferences &&
         same_by_id(a.models, b.models, id) && same_by_id(a.profiles, b.profiles, id) &&
         packs(a.pack_settings) == packs(b.pack_settings);
}

}  // namespace hyperdoc
