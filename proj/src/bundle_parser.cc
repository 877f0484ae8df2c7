// Parser for the bundle source format (docs/bundle_format.md).

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bundle_schema.h"
#include "hyperdoc/bundle.h"
#include "hyperdoc/error.h"
#include "text_util.h"

namespace hyperdoc {

std::string to_string(const Diagnostic& d) {
  std::ostringstream os;
  os << d.where.file;
  if (d.where.line > 0) os << ":" << d.where.line;
  os << ": " << (d.severity == Diagnostic::Severity::kError ? "error" : "warning") << " ["
     << d.code << "]";
  if (!d.id.empty()) os << " " << d.id << ":";
  os << " " << d.message;
  return os.str();
}

const ExpertiseModel* Bundle::find_model(std::string_view id) const {
  for (const ExpertiseModel& m : models) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

const StandardProfile* Bundle::find_profile(std::string_view id) const {
  for (const StandardProfile& p : profiles) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const PackSettings* Bundle::find_pack_settings(std::string_view language) const {
  for (const PackSettings& p : pack_settings) {
    if (p.language == language) return &p;
  }
  return nullptr;
}

namespace {

struct RawProperty {
  std::string key;
  std::string qualifier;
  std::string value;
  int line = 0;
};

struct RawRecord {
  std::string kind;
  std::string id;
  SourceLocation where;
  std::vector<RawProperty> props;
};

class Parser {
 public:
  explicit Parser(std::vector<Diagnostic>& diags) : diags_(diags) {}

  void error(const SourceLocation& where, std::string id, std::string message,
             std::string code = "parse") {
    diags_.push_back({Diagnostic::Severity::kError, std::move(code), where, std::move(id),
                      std::move(message)});
  }

  std::vector<RawRecord> split_records(const SourceFile& file, std::string_view extension) {
    std::vector<RawRecord> out;
    std::istringstream in(file.text);
    std::string line;
    int lineno = 0;
    bool skipping = false;  // inside a record whose header was rejected
    while (std::getline(in, line)) {
      ++lineno;
      SourceLocation where{file.path, lineno};
      if (!line.empty() && line.back() == '\r') {
        error(where, "", "CR line ending; bundle files use LF");
        line.pop_back();
      }
      std::string_view body = text::trim(line);
      if (body.empty() || body.front() == '#') continue;
      const bool indented = std::isspace(static_cast<unsigned char>(line.front())) != 0;
      if (!indented) {
        skipping = false;
        auto sp = body.find_first_of(" \t");
        std::string kind(body.substr(0, sp));
        std::string id = sp == std::string_view::npos ? "" : std::string(text::trim(body.substr(sp)));
        const schema::RecordSpec* spec = schema::find_record(extension, kind);
        if (!spec) {
          error(where, id, "unknown record kind '" + kind + "' in " + std::string(extension) + " file");
          skipping = true;
          continue;
        }
        if (spec->id_required && id.empty()) {
          error(where, "", "record '" + kind + "' needs an id");
          skipping = true;
          continue;
        }
        if (id.find_first_of(" \t") != std::string::npos) {
          error(where, id, "ids may not contain whitespace");
          skipping = true;
          continue;
        }
        out.push_back({kind, id, where, {}});
        continue;
      }
      if (skipping) continue;
      if (out.empty()) {
        error(where, "", "property line outside any record");
        continue;
      }
      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        error(where, out.back().id, "expected 'key: value'");
        continue;
      }
      std::string_view lhs = text::trim(body.substr(0, colon));
      std::string_view rhs = text::trim(body.substr(colon + 1));
      RawProperty prop;
      prop.line = lineno;
      auto sp = lhs.find_first_of(" \t");
      prop.key = std::string(lhs.substr(0, sp));
      if (sp != std::string_view::npos) prop.qualifier = std::string(text::trim(lhs.substr(sp)));
      prop.value = std::string(rhs);

      const schema::RecordSpec* spec = schema::find_record(extension, out.back().kind);
      const schema::KeySpec* key = schema::find_key(*spec, prop.key);
      if (!key) {
        error(where, out.back().id, "unknown key '" + prop.key + "' for " + out.back().kind);
        continue;
      }
      if (key->qualified != !prop.qualifier.empty()) {
        error(where, out.back().id,
              key->qualified ? "key '" + prop.key + "' needs a qualifier"
                             : "key '" + prop.key + "' takes no qualifier");
        continue;
      }
      if (!key->repeatable) {
        for (const RawProperty& p : out.back().props) {
          if (p.key == prop.key) {
            error(where, out.back().id, "duplicate key '" + prop.key + "'");
          }
        }
      } else if (key->qualified) {
        for (const RawProperty& p : out.back().props) {
          if (p.key == prop.key && p.qualifier == prop.qualifier) {
            error(where, out.back().id, "duplicate '" + prop.key + " " + prop.qualifier + "'");
          }
        }
      }
      out.back().props.push_back(std::move(prop));
    }
    return out;
  }

  std::optional<SlotValue> parse_value(std::string_view s, const SourceLocation& where,
                                       const std::string& id) {
    s = text::trim(s);
    if (s.empty()) {
      error(where, id, "empty value");
      return std::nullopt;
    }
    if (s.front() == '"') {
      std::string out;
      size_t i = 1;
      for (; i < s.size() && s[i] != '"'; ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        out += s[i];
      }
      if (i != s.size() - 1) {
        error(where, id, "unterminated or trailing text after string '" + std::string(s) + "'");
        return std::nullopt;
      }
      return SlotValue::text(std::move(out));
    }
    if (s.front() == '@') {
      std::string ref(text::trim(s.substr(1)));
      if (ref.empty() || ref.find_first_of(" \t") != std::string::npos) {
        error(where, id, "bad reference '" + std::string(s) + "'");
        return std::nullopt;
      }
      return SlotValue::ref(std::move(ref));
    }
    if (s.front() == '[') {
      if (s.back() != ']') {
        error(where, id, "unterminated list '" + std::string(s) + "'");
        return std::nullopt;
      }
      std::vector<SlotValue> items;
      for (const std::string& piece : text::split_top_level(s.substr(1, s.size() - 2))) {
        auto v = parse_value(piece, where, id);
        if (!v) return std::nullopt;
        items.push_back(std::move(*v));
      }
      return SlotValue::list(std::move(items));
    }
    // Number with optional unit: "12", "4.5 kg".
    {
      auto sp = s.find_first_of(" \t");
      std::string_view num = s.substr(0, sp);
      double v = 0;
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec == std::errc() && ptr == num.data() + num.size()) {
        std::string unit = sp == std::string_view::npos ? "" : std::string(text::trim(s.substr(sp)));
        if (unit.find_first_of(" \t") != std::string::npos) {
          error(where, id, "unit must be a single token in '" + std::string(s) + "'");
          return std::nullopt;
        }
        return SlotValue::number(v, std::move(unit));
      }
    }
    if (s.find_first_of(" \t,") != std::string_view::npos) {
      error(where, id, "symbol '" + std::string(s) + "' contains spaces; quote text values");
      return std::nullopt;
    }
    return SlotValue::symbol(std::string(s));
  }

  std::optional<bool> parse_bool(const RawProperty& p, const SourceLocation& where,
                                 const std::string& id) {
    if (p.value == "yes" || p.value == "true") return true;
    if (p.value == "no" || p.value == "false") return false;
    error(where, id, "expected yes/no for '" + p.key + "', got '" + p.value + "'");
    return std::nullopt;
  }

  std::vector<std::string> parse_ids(std::string_view v) {
    std::vector<std::string> out;
    for (std::string& piece : text::split_top_level(v)) {
      if (!piece.empty() && piece.front() == '@') piece.erase(0, 1);
      out.push_back(std::move(piece));
    }
    return out;
  }

  std::optional<Filler> parse_filler(std::string_view v, const SourceLocation& where,
                                     const std::string& id) {
    auto value = parse_value(v, where, id);
    if (!value) return std::nullopt;
    if (value->is(SlotValue::Kind::kText)) return Filler{Filler::Kind::kText, value->str()};
    if (value->is(SlotValue::Kind::kRef)) {
      if (value->str() == "self") return Filler{Filler::Kind::kSelf, ""};
      if (value->str() == "parent") return Filler{Filler::Kind::kParent, ""};
      return Filler{Filler::Kind::kEntity, value->str()};
    }
    error(where, id, "case filler must be @id, @self, @parent or \"text\"");
    return std::nullopt;
  }

  void add_frame(const RawRecord& r, std::vector<Frame>& frames) {
    Frame f;
    f.id = r.id;
    f.kind = r.kind == "task" ? NodeKind::kTask
             : r.kind == "instance" ? NodeKind::kInstance
                                    : NodeKind::kConcept;
    f.where = r.where;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      if (p.key == "isa") {
        f.isa = parse_ids(p.value);
      } else if (p.key == "lex") {
        f.lexical_anchor = p.value;
      } else if (p.key == "parts") {
        f.parts = parse_ids(p.value);
      } else if (p.key == "slot") {
        if (f.slot(p.qualifier)) error(where, r.id, "slot '" + p.qualifier + "' defined twice");
        if (auto v = parse_value(p.value, where, r.id)) f.slots.push_back({p.qualifier, std::move(*v)});
      } else if (p.key == "does") {
        std::string target = p.value;
        if (!target.empty() && target.front() == '@') target.erase(0, 1);
        f.actions.emplace_back(p.qualifier, target);
      } else if (p.key == "define") {
        for (const std::string& piece : text::split_top_level(p.value)) {
          auto eq = piece.find('=');
          if (eq == std::string::npos) {
            error(where, r.id, "defining property '" + piece + "' must be attribute=value");
            continue;
          }
          std::string attr(text::trim(std::string_view(piece).substr(0, eq)));
          if (auto v = parse_value(std::string_view(piece).substr(eq + 1), where, r.id)) {
            f.defining.push_back({attr, std::move(*v)});
          }
        }
      }
    }
    frames.push_back(std::move(f));
  }

  void add_action(const RawRecord& r, std::vector<ActionRep>& actions) {
    ActionRep a;
    a.id = r.id;
    a.where = r.where;
    bool kind_seen = false;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      if (p.key == "kind") {
        kind_seen = true;
        if (p.value == "canned") a.kind = ActionKind::kCanned;
        else if (p.value == "ekr") a.kind = ActionKind::kEkr;
        else if (p.value == "tcf") a.kind = ActionKind::kTcf;
        else if (p.value == "frame") a.kind = ActionKind::kCaseFrame;
        else error(where, r.id, "unknown action kind '" + p.value + "'");
      } else if (p.key == "text") {
        auto v = parse_value(p.value, where, r.id);
        if (v && !v->is(SlotValue::Kind::kText)) error(where, r.id, "action text must be quoted");
        else if (v) a.text = v->str();
      } else if (p.key == "verb") {
        a.verb = p.value;
      } else if (p.key == "steps") {
        a.steps = parse_ids(p.value);
      } else if (auto role = parse_role(p.key)) {
        if (auto filler = parse_filler(p.value, where, r.id)) a.roles.emplace_back(*role, *filler);
      }
    }
    if (!kind_seen) error(r.where, r.id, "action needs a 'kind'");
    if (a.kind == ActionKind::kEkr) {
      a.segments = parse_ekr(a.text);
      a.text.clear();
    }
    // Roles are kept in inventory order whatever the source order.
    std::stable_sort(a.roles.begin(), a.roles.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    if ((a.kind == ActionKind::kCanned || a.kind == ActionKind::kEkr) && !a.roles.empty()) {
      error(r.where, r.id, "canned/ekr actions take no case roles");
    }
    if ((a.kind == ActionKind::kTcf || a.kind == ActionKind::kCaseFrame) && a.verb.empty()) {
      error(r.where, r.id, "case-frame actions need a 'verb'");
    }
    if (a.kind == ActionKind::kCaseFrame) {
      for (const auto& [role, filler] : a.roles) {
        if (filler.kind == Filler::Kind::kText) {
          error(r.where, r.id, "frame actions take no text fillers; use kind: tcf");
          break;
        }
      }
    }
    if (a.kind == ActionKind::kTcf &&
        std::none_of(a.roles.begin(), a.roles.end(),
                     [](const auto& rf) { return rf.second.kind == Filler::Kind::kText; })) {
      error(r.where, r.id, "tcf actions need at least one text filler; use kind: frame");
    }
    actions.push_back(std::move(a));
  }

  void add_lexeme(const RawRecord& r, std::vector<LexicalEntry>& out) {
    LexicalEntry e;
    e.id = r.id;
    e.where = r.where;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      if (p.key == "lang") e.language = p.value;
      else if (p.key == "pos") {
        if (auto pos = parse_part_of_speech(p.value)) e.part_of_speech = *pos;
        else error(where, r.id, "unknown part of speech '" + p.value + "'");
      } else if (p.key == "base") e.base_form = p.value;
      else if (p.key == "denotes") e.denotes = p.value;
      else if (p.key == "basic-level") {
        if (auto b = parse_bool(p, where, r.id)) e.basic_level = *b;
      } else if (p.key == "abbreviation-of") e.abbreviation_of = p.value;
      else if (p.key == "category") e.attribute_category = p.value;
      else if (p.key == "form") e.irregular_forms[p.qualifier] = p.value;
      else if (p.key == "prep") e.role_prepositions[p.qualifier] = p.value;
    }
    out.push_back(std::move(e));
  }

  void add_pack(const RawRecord& r, std::vector<PackSettings>& out) {
    PackSettings s;
    s.language = r.id;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      if (p.key == "a-words") s.a_words = text::split_top_level(p.value);
      else if (p.key == "an-words") s.an_words = text::split_top_level(p.value);
      else if (p.key == "contract") {
        auto arrow = p.value.find("=>");
        if (arrow == std::string::npos) {
          error(where, r.id, "contraction must be 'full form => contracted'");
          continue;
        }
        s.contractions.emplace_back(std::string(text::trim(p.value.substr(0, arrow))),
                                    std::string(text::trim(p.value.substr(arrow + 2))));
      }
    }
    out.push_back(std::move(s));
  }

  void add_rule(const RawRecord& r, std::vector<ContentRule>& out) {
    ContentRule rule;
    rule.id = r.id;
    rule.where = r.where;
    std::set<std::string> seen;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      seen.insert(p.key);
      if (p.key == "question") {
        if (auto q = parse_question(p.value)) rule.question = *q;
        else error(where, r.id, "unknown question '" + p.value + "'");
      } else if (p.key == "component") rule.component_class = p.value;
      else if (p.key == "task") rule.task_class = p.value;
      else if (p.key == "schema") {
        if (auto s = parse_schema(p.value)) rule.schema = *s;
        else error(where, r.id, "unknown schema '" + p.value + "'");
      } else if (p.key == "bullet") {
        if (auto b = parse_bool(p, where, r.id)) rule.bullet = *b;
      } else if (p.key == "unabbreviate") {
        if (auto b = parse_bool(p, where, r.id)) rule.unabbreviate = *b;
      } else if (p.key == "conveys") rule.conveyed_attributes = text::split_top_level(p.value);
      else if (p.key == "requires") rule.required_attributes = text::split_top_level(p.value);
      else if (p.key == "followups") {
        for (const std::string& q : text::split_top_level(p.value)) {
          if (auto parsed = parse_question(q)) rule.candidate_followups.push_back(*parsed);
          else error(where, r.id, "unknown followup question '" + q + "'");
        }
      }
    }
    for (const char* required : {"question", "component", "task", "schema"}) {
      if (!seen.contains(required)) error(r.where, r.id, std::string("rule needs '") + required + "'");
    }
    out.push_back(std::move(rule));
  }

  void add_preferences(const RawRecord& r, Preferences& prefs) {
    for (const RawProperty& p : r.props) {
      if (p.key == "attribute-order") prefs.attribute_order = text::split_top_level(p.value);
      else if (p.key == "modifier-categories") prefs.modifier_categories = text::split_top_level(p.value);
    }
  }

  void add_model(const RawRecord& r, std::vector<ExpertiseModel>& out) {
    ExpertiseModel m;
    m.id = r.id;
    m.where = r.where;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      if (p.key == "knows") {
        if (p.value == "*") m.knows_all_lexemes = true;
        else for (auto& id : parse_ids(p.value)) m.known_lexemes.insert(id);
      } else if (p.key == "knows-actions") {
        if (p.value == "*") m.knows_all_actions = true;
        else for (auto& a : text::split_top_level(p.value)) m.known_actions.insert(a);
      } else if (p.key == "contractions") {
        if (auto b = parse_bool(p, where, r.id)) m.style.contractions = *b;
      } else if (p.key == "abbreviations") {
        if (auto b = parse_bool(p, where, r.id)) m.style.allow_abbreviations = *b;
      } else if (p.key == "lang") m.language = p.value;
    }
    out.push_back(std::move(m));
  }

  void add_profile(const RawRecord& r, std::vector<StandardProfile>& out) {
    StandardProfile prof;
    prof.id = r.id;
    prof.where = r.where;
    for (const RawProperty& p : r.props) {
      SourceLocation where{r.where.file, p.line};
      if (p.key == "max-words") {
        int v = 0;
        auto [ptr, ec] = std::from_chars(p.value.data(), p.value.data() + p.value.size(), v);
        if (ec != std::errc() || ptr != p.value.data() + p.value.size()) {
          error(where, r.id, "max-words must be an integer");
        } else {
          prof.max_sentence_words = v;
        }
      } else if (p.key == "approved") {
        if (p.value == "all-in-pack") {
          prof.approve_all_in_pack = true;
        } else {
          prof.approve_all_in_pack = false;
          for (auto& id : parse_ids(p.value)) prof.approved_lexemes.insert(id);
        }
      } else if (p.key == "banned") {
        for (auto& id : parse_ids(p.value)) prof.banned_lexemes.insert(id);
      } else if (p.key == "banned-features") {
        prof.banned_features.clear();
        for (auto& f : text::split_top_level(p.value)) {
          if (f != kGerundForm && f != kComplexTense && f != kPassivePattern) {
            error(where, r.id, "unknown banned feature '" + f + "'");
          }
          prof.banned_features.insert(f);
        }
      } else if (p.key == "lang") prof.language = p.value;
    }
    out.push_back(std::move(prof));
  }

 private:
  std::vector<Diagnostic>& diags_;
};

std::string extension_of(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot);
}

}  // namespace

LoadResult load_bundle(const std::vector<SourceFile>& files) {
  LoadResult result;
  Parser parser(result.diagnostics);

  std::vector<Frame> frames;
  std::vector<ActionRep> actions;
  std::vector<LexicalEntry> lexemes;
  auto bundle = std::make_shared<Bundle>();

  std::vector<SourceFile> ordered = files;
  std::sort(ordered.begin(), ordered.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path < b.path; });
  bool preferences_seen = false;
  for (const SourceFile& file : ordered) {
    const std::string ext = extension_of(file.path);
    for (const RawRecord& r : parser.split_records(file, ext)) {
      if (r.kind == "concept" || r.kind == "task" || r.kind == "instance") parser.add_frame(r, frames);
      else if (r.kind == "action") parser.add_action(r, actions);
      else if (r.kind == "lexeme") parser.add_lexeme(r, lexemes);
      else if (r.kind == "pack") parser.add_pack(r, bundle->pack_settings);
      else if (r.kind == "rule") parser.add_rule(r, bundle->rules);
      else if (r.kind == "preferences") {
        if (preferences_seen) parser.error(r.where, "", "more than one preferences record");
        preferences_seen = true;
        parser.add_preferences(r, bundle->preferences);
      } else if (r.kind == "expertise") parser.add_model(r, bundle->models);
      else if (r.kind == "profile") parser.add_profile(r, bundle->profiles);
    }
  }
  if (bundle->profiles.empty()) bundle->profiles.push_back(StandardProfile{});

  bundle->kb = KnowledgeBase(std::move(frames), std::move(actions));
  bundle->lexicon = Lexicon(std::move(lexemes));

  for (Diagnostic& d : validate_bundle(*bundle)) result.diagnostics.push_back(std::move(d));
  const bool has_error =
      std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                  [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::kError; });
  if (!has_error) result.bundle = std::move(bundle);
  return result;
}

std::vector<SourceFile> read_bundle_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIo, dir.string(), "bundle directory '" + dir.string() + "' not found");
  }
  static const std::vector<std::pair<std::string, std::string>> kLayout = {
      {"concepts", ".kb"}, {"instances", ".kb"},   {"lexicon", ".lex"},
      {"rules", ".rule"},  {"models", ".model"},   {"standards", ".profile"}};
  std::vector<SourceFile> files;
  for (const auto& [sub, ext] : kLayout) {
    fs::path d = dir / sub;
    if (!fs::is_directory(d)) continue;
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(d)) {
      if (entry.is_regular_file() && entry.path().extension() == ext) paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const fs::path& p : paths) {
      std::ifstream in(p, std::ios::binary);
      if (!in) throw Error(ErrorCode::kIo, p.string(), "cannot read '" + p.string() + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      files.push_back({(fs::path(sub) / p.filename()).generic_string(), ss.str()});
    }
  }
  return files;
}

LoadResult load_bundle_dir(const std::filesystem::path& dir) {
  return load_bundle(read_bundle_dir(dir));
}

}  // namespace hyperdoc
