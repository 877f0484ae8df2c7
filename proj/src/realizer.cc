#include "hyperdoc/realizer.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "hyperdoc/error.h"
#include "hyperdoc/standards.h"
#include "text_util.h"
#include "tokens.h"

namespace hyperdoc {
namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Built-in irregular forms, consulted after the entry's own.
const std::map<std::string, std::map<std::string, std::string>>& irregulars() {
  static const std::map<std::string, std::map<std::string, std::string>> table = {
      {"man", {{kPlural, "men"}}},
      {"woman", {{kPlural, "women"}}},
      {"child", {{kPlural, "children"}}},
      {"person", {{kPlural, "people"}}},
      {"foot", {{kPlural, "feet"}}},
      {"tooth", {{kPlural, "teeth"}}},
      {"mouse", {{kPlural, "mice"}}},
      {"chassis", {{kPlural, "chassis"}}},
      {"series", {{kPlural, "series"}}},
      {"species", {{kPlural, "species"}}},
      {"datum", {{kPlural, "data"}}},
      {"knife", {{kPlural, "knives"}}},
      {"leaf", {{kPlural, "leaves"}}},
      {"half", {{kPlural, "halves"}}},
      {"shelf", {{kPlural, "shelves"}}},
      {"be", {{kPresent3sg, "is"}, {kPast, "was"}, {kPastParticiple, "been"}}},
      {"have", {{kPresent3sg, "has"}, {kPast, "had"}, {kPastParticiple, "had"}}},
      {"do", {{kPresent3sg, "does"}, {kPast, "did"}, {kPastParticiple, "done"}}},
      {"go", {{kPresent3sg, "goes"}, {kPast, "went"}, {kPastParticiple, "gone"}}},
      {"put", {{kPast, "put"}, {kPastParticiple, "put"}}},
      {"set", {{kPast, "set"}, {kPastParticiple, "set"}}},
      {"cut", {{kPast, "cut"}, {kPastParticiple, "cut"}}},
      {"shut", {{kPast, "shut"}, {kPastParticiple, "shut"}}},
      {"hold", {{kPast, "held"}, {kPastParticiple, "held"}}},
      {"run", {{kPast, "ran"}, {kPastParticiple, "run"}}},
      {"take", {{kPast, "took"}, {kPastParticiple, "taken"}}},
      {"make", {{kPast, "made"}, {kPastParticiple, "made"}}},
      {"get", {{kPast, "got"}, {kPastParticiple, "got"}}},
      {"find", {{kPast, "found"}, {kPastParticiple, "found"}}},
      {"slide", {{kPast, "slid"}, {kPastParticiple, "slid"}}},
      {"fit", {{kPast, "fitted"}, {kPastParticiple, "fitted"}}},
      {"stop", {{kPast, "stopped"}, {kPastParticiple, "stopped"}}},
      {"plug", {{kPast, "plugged"}, {kPastParticiple, "plugged"}}},
      {"grip", {{kPast, "gripped"}, {kPastParticiple, "gripped"}}},
      {"unplug", {{kPast, "unplugged"}, {kPastParticiple, "unplugged"}}},
      {"tighten", {{kPast, "tightened"}, {kPastParticiple, "tightened"}}},
  };
  return table;
}

std::string regular_s(const std::string& w) {
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") ||
      ends_with(w, "sh")) {
    return w + "es";
  }
  if (w.size() > 1 && w.back() == 'y' && !is_vowel(w[w.size() - 2])) return w.substr(0, w.size() - 1) + "ies";
  return w + "s";
}

// One-syllable consonant-vowel-consonant words double the final consonant
// ("stop", "stopped").
bool doubles_final(const std::string& w) {
  if (w.size() < 3) return false;
  const char c = w.back();
  if (is_vowel(c) || c == 'w' || c == 'x' || c == 'y' || !is_vowel(w[w.size() - 2]) ||
      is_vowel(w[w.size() - 3])) {
    return false;
  }
  int groups = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (is_vowel(w[i]) && (i == 0 || !is_vowel(w[i - 1]))) ++groups;
  }
  return groups == 1;
}

std::string regular_ed(const std::string& w) {
  if (ends_with(w, "e")) return w + "d";
  if (doubles_final(w)) return w + w.back() + "ed";
  if (w.size() > 1 && w.back() == 'y' && !is_vowel(w[w.size() - 2])) return w.substr(0, w.size() - 1) + "ied";
  return w + "ed";
}

std::string regular_ing(const std::string& w) {
  if (ends_with(w, "ie")) return w.substr(0, w.size() - 2) + "ying";
  if (ends_with(w, "e") && !ends_with(w, "ee") && w.size() > 2) return w.substr(0, w.size() - 1) + "ing";
  if (doubles_final(w)) return w + w.back() + "ing";
  return w + "ing";
}

std::string inflect_word(const std::string& w, std::string_view feature, bool verb) {
  const auto& table = irregulars();
  if (auto it = table.find(text::lower(w)); it != table.end()) {
    if (auto f = it->second.find(std::string(feature)); f != it->second.end()) return f->second;
  }
  if (feature == kPlural) return regular_s(w);
  if (feature == kPresent3sg) {
    if (verb && w.size() > 1 && w.back() == 'o' && !is_vowel(w[w.size() - 2])) return w + "es";
    return regular_s(w);
  }
  if (feature == kPast || feature == kPastParticiple) return regular_ed(w);
  if (feature == kGerund) return regular_ing(w);
  return w;
}

class Writer {
 public:
  Writer(const LanguagePack& pack, const RealizeContext& ctx, std::vector<AnnotatedSpan>& out)
      : pack_(pack), lex_(ctx.bundle.lexicon), lang_(ctx.expertise.language), out_(out) {}

  void set_bullet(std::optional<int> index, bool fragment) {
    fmt_.bullet_index = index;
    fmt_.fragment = fragment;
  }

  void grammar(std::string text) {
    AnnotatedSpan s;
    s.text = std::move(text);
    s.formatting = fmt_;
    out_.push_back(std::move(s));
  }

  std::string form(const std::string& lexeme, std::string_view feature = {}) const {
    const LexicalEntry* e = lex_.find(lexeme);
    if (!e) return lexeme;
    return pack_.inflect(*e, feature);
  }

  void word(const std::string& lexeme, std::string_view feature = {}, Annotation ann = {}) {
    AnnotatedSpan s;
    s.text = form(lexeme, feature);
    s.lexeme = lexeme;
    s.annotation = std::move(ann);
    s.formatting = fmt_;
    if (feature == kGerund) s.features.insert(kGerundForm);
    else if (!feature.empty()) s.features.insert(std::string(feature));
    out_.push_back(std::move(s));
  }

  void literal(std::string text, bool canned) {
    AnnotatedSpan s;
    s.text = std::move(text);
    s.formatting = fmt_;
    if (canned) s.provenance = Provenance::kCanned;
    else s.literal = true;
    out_.push_back(std::move(s));
  }

  // Prenominal words for the distinguishing attributes of a reference.
  void attribute_words(const ReferringPlan& r, std::vector<std::string>& texts,
                       std::vector<std::string>& lexemes) const {
    for (const Property& p : r.attributes) {
      auto found = lex_.denoting(lang_, p.value.str(), PartOfSpeech::kAdjective);
      if (found.empty()) found = lex_.denoting(lang_, p.value.str());
      if (found.empty()) {
        texts.push_back(p.value.str());
        continue;
      }
      texts.push_back(found.front()->base_form);
      lexemes.push_back(found.front()->id);
    }
  }

  enum class Case { kSubject, kObject, kPossessive };

  void np(const ReferringPlan& r, Case c, bool link, const std::vector<Relation>* prenominal = nullptr) {
    if (r.pronoun) {
      grammar(c == Case::kPossessive ? "its" : "it");
      return;
    }
    if (r.determiner == Determiner::kDefinite) grammar("the");
    else if (r.determiner == Determiner::kIndefinite) grammar("a");
    std::vector<std::string> texts, lexemes;
    attribute_words(r, texts, lexemes);
    if (link) {
      AnnotatedSpan s;
      std::vector<std::string> parts = texts;
      if (prenominal) {
        for (const Relation& rel : *prenominal) parts.push_back(relation_text(rel));
      }
      parts.push_back(form(r.head_lexeme));
      s.text = text::join(parts, " ");
      s.annotation = Annotation::entity(r.referent);
      s.lexeme = r.head_lexeme;
      s.modifier_lexemes = lexemes;
      s.formatting = fmt_;
      out_.push_back(std::move(s));
      return;
    }
    for (const Property& p : r.attributes) {
      auto found = lex_.denoting(lang_, p.value.str(), PartOfSpeech::kAdjective);
      if (found.empty()) found = lex_.denoting(lang_, p.value.str());
      if (found.empty()) literal(p.value.str(), false);
      else word(found.front()->id);
    }
    if (prenominal) {
      for (const Relation& rel : *prenominal) {
        if (rel.value.kind == ValuePlan::Kind::kWord) word(rel.value.lexeme);
        else literal(relation_text(rel), rel.value.canned);
      }
    }
    word(r.head_lexeme);
  }

  std::string relation_text(const Relation& rel) const {
    if (rel.value.kind == ValuePlan::Kind::kWord) return form(rel.value.lexeme);
    if (rel.value.kind == ValuePlan::Kind::kReferences) {
      std::vector<std::string> heads;
      for (const ReferringPlan& r : rel.value.refs) heads.push_back(form(r.head_lexeme));
      return text::join(heads, " ");
    }
    return rel.value.text;
  }

  void conjoin(size_t n, size_t i) {
    if (i + 2 < n) grammar(",");
    if (i + 2 == n) grammar("and");
  }

  void refs(const std::vector<ReferringPlan>& rs) {
    for (size_t i = 0; i < rs.size(); ++i) {
      np(rs[i], Case::kObject, true);
      if (i + 1 < rs.size()) grammar(i + 2 == rs.size() ? "and" : ",");
    }
  }

  void value(const ValuePlan& v) {
    switch (v.kind) {
      case ValuePlan::Kind::kWord: word(v.lexeme); return;
      case ValuePlan::Kind::kLiteral: literal(v.text, v.canned); return;
      case ValuePlan::Kind::kReferences: refs(v.refs); return;
      case ValuePlan::Kind::kClause:
        grammar("to");
        action(*v.clause);
        return;
    }
  }

  void action(const SemanticSpec& s) {
    word(s.verb_lexeme, {}, Annotation::action_link(s.action, s.action_target));
    for (const RoleArg& a : s.roles) {
      if (!a.preposition.empty()) grammar(a.preposition);
      value(a.value);
    }
  }

  void subject(const ReferringPlan& domain) { np(domain, Case::kSubject, !domain.pronoun); }

  void attributive(const SemanticSpec& s) {
    const ReferringPlan& d = *s.domain;
    for (size_t i = 0; i < s.relations.size(); ++i) {
      const Relation& rel = s.relations[i];
      const LexicalEntry* e = lex_.find(rel.lexeme);
      if (e && e->part_of_speech == PartOfSpeech::kVerb) {
        subject(d);
        word(rel.lexeme, kPresent3sg);
        if (auto it = e->role_prepositions.find("object"); it != e->role_prepositions.end()) {
          grammar(it->second);
        }
        value(rel.value);
      } else {
        if (d.pronoun) {
          grammar("its");
          word(rel.lexeme);
        } else {
          grammar("the");
          word(rel.lexeme);
          grammar("of");
          np(d, Case::kObject, true);
        }
        const bool plural = rel.value.kind == ValuePlan::Kind::kReferences && rel.value.refs.size() > 1;
        grammar(plural ? "are" : "is");
        value(rel.value);
      }
      conjoin(s.relations.size(), i);
    }
    grammar(".");
  }

  void spec(const SemanticSpec& s) {
    set_bullet(s.bullet_index, false);
    switch (s.process) {
      case Process::kIdentity:
        subject(*s.domain);
        grammar("is");
        np(*s.range, Case::kObject, false, &s.relations);
        grammar(".");
        return;
      case Process::kAttributive:
        attributive(s);
        return;
      case Process::kLocative:
        subject(*s.domain);
        grammar("is");
        grammar(s.preposition.empty() ? "in" : s.preposition);
        np(*s.range, Case::kObject, true);
        grammar(".");
        return;
      case Process::kPartsPossession:
        subject(*s.domain);
        grammar("has");
        if (s.bullet) {
          grammar("these parts");
          grammar(":");
          for (size_t i = 0; i < s.items.size(); ++i) {
            set_bullet(static_cast<int>(i), true);
            np(s.items[i], Case::kObject, true);
          }
          set_bullet(std::nullopt, false);
          return;
        }
        refs(s.items);
        grammar(".");
        return;
      case Process::kImperativeAction:
        if (s.mood == Mood::kInfinitive) grammar("to");
        action(s);
        grammar(".");
        return;
    }
  }

  void canned(const CannedPlan& c) {
    set_bullet(c.bullet_index, false);
    std::string last;
    for (const auto& seg : c.segments) {
      if (seg.ref) {
        np(*seg.ref, Case::kObject, true);
        last = "x";
      } else {
        literal(seg.text, true);
        auto t = text::trim(seg.text);
        if (!t.empty()) last = std::string(t);
      }
    }
    if (last.empty() || !tokens::is_terminal(last.back())) grammar(".");
  }

 private:
  const LanguagePack& pack_;
  const Lexicon& lex_;
  std::string lang_;
  std::vector<AnnotatedSpan>& out_;
  Formatting fmt_;
};

const std::vector<std::pair<std::string, std::string>>& default_contractions() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"it is", "it's"}, {"do not", "don't"}, {"does not", "doesn't"},
      {"is not", "isn't"}, {"are not", "aren't"}, {"can not", "can't"},
  };
  return list;
}

bool article_an(const std::string& next, const PackSettings* pack) {
  std::string w;
  for (char c : next) {
    if (c == ' ' || c == '-') break;
    w += c;
  }
  if (w.empty()) return false;
  const std::string lw = text::lower(w);
  static const std::vector<std::string> a_words = {"one", "once", "unit", "uniform", "universal", "union",
                                                   "unique", "usual", "useful", "user", "utility", "european"};
  static const std::vector<std::string> an_words = {"hour", "honest", "honour", "honor", "heir"};
  auto in = [&lw](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), lw) != v.end(); };
  if (pack && in(pack->an_words)) return true;
  if (pack && in(pack->a_words)) return false;
  if (in(an_words)) return true;
  if (in(a_words)) return false;
  bool initialism = w.size() >= 2 && std::isupper(static_cast<unsigned char>(w[0]));
  for (char c : w) {
    if (std::islower(static_cast<unsigned char>(c))) initialism = false;
  }
  if (initialism) return std::string_view("AEFHILMNORSX").find(w[0]) != std::string_view::npos;
  if (std::isdigit(static_cast<unsigned char>(w[0]))) {
    size_t digits = 0;
    while (digits < w.size() && std::isdigit(static_cast<unsigned char>(w[digits]))) ++digits;
    if (w[0] == '8') return true;
    return digits == 2 && (w.compare(0, 2, "11") == 0 || w.compare(0, 2, "18") == 0);
  }
  return is_vowel(w[0]);
}

bool plain(const AnnotatedSpan& s) { return s.annotation.kind == Annotation::Kind::kPlain; }

std::string match_case(const std::string& model, std::string word) {
  if (!model.empty() && std::isupper(static_cast<unsigned char>(model[0])) && !word.empty()) {
    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  }
  return word;
}

class EnglishPack : public LanguagePack {
 public:
  std::string language() const override { return "en"; }

  std::vector<AnnotatedSpan> realize(std::span<const TextPlan> plans,
                                     const RealizeContext& ctx) const override {
    std::vector<AnnotatedSpan> out;
    Writer w(*this, ctx, out);
    for (const TextPlan& p : plans) {
      if (const auto* s = std::get_if<SemanticSpec>(&p)) w.spec(*s);
      else w.canned(std::get<CannedPlan>(p));
    }
    return out;
  }

  std::string realize_title(Question question, const ReferringPlan& topic, std::string_view action,
                            const RealizeContext& ctx) const override {
    const Lexicon& lex = ctx.bundle.lexicon;
    auto base = [&](const std::string& id) {
      const LexicalEntry* e = lex.find(id);
      return e ? e->base_form : id;
    };
    std::vector<std::string> words = {"the"};
    for (const Property& p : topic.attributes) {
      auto found = lex.denoting(ctx.expertise.language, p.value.str(), PartOfSpeech::kAdjective);
      words.push_back(found.empty() ? p.value.str() : found.front()->base_form);
    }
    words.push_back(base(topic.head_lexeme));
    const std::string np = text::join(words, " ");
    switch (question) {
      case Question::kWhatIsIt: return "What is " + np + "?";
      case Question::kWhereIsIt: return "Where is " + np + "?";
      case Question::kWhatAreItsParts: return "What are the parts of " + np + "?";
      case Question::kWhatAreItsSpecs: return "What are the specs of " + np + "?";
      case Question::kWhatIsItsPurpose: return "What is the purpose of " + np + "?";
      case Question::kWhatDoesItConnectTo: return "What does " + np + " connect to?";
      case Question::kHowDoIPerform: {
        auto verbs = lex.denoting(ctx.expertise.language, action, PartOfSpeech::kVerb);
        const std::string verb = verbs.empty() ? std::string(action) : verbs.front()->base_form;
        return "How do I " + verb + " " + np + "?";
      }
    }
    return np;
  }

  std::string inflect(const LexicalEntry& entry, std::string_view feature) const override {
    if (feature.empty()) return entry.base_form;
    if (auto it = entry.irregular_forms.find(std::string(feature)); it != entry.irregular_forms.end()) {
      return it->second;
    }
    const bool verb = entry.part_of_speech == PartOfSpeech::kVerb;
    const std::string& b = entry.base_form;
    // Verbs inflect their first word ("switch off"), nouns their last.
    if (verb) {
      size_t sp = b.find(' ');
      if (sp == std::string::npos) return inflect_word(b, feature, true);
      return inflect_word(b.substr(0, sp), feature, true) + b.substr(sp);
    }
    size_t sp = b.rfind(' ');
    if (sp == std::string::npos) return inflect_word(b, feature, false);
    return b.substr(0, sp + 1) + inflect_word(b.substr(sp + 1), feature, false);
  }

  std::vector<AnnotatedSpan> postprocess(std::vector<AnnotatedSpan> spans,
                                         const RealizeContext& ctx) const override {
    const PackSettings* pack = ctx.bundle.find_pack_settings(language());

    // Tokens.
    std::vector<AnnotatedSpan> toks;
    for (AnnotatedSpan& s : spans) {
      if (!plain(s)) {
        s.text = std::string(text::trim(s.text));
        if (!s.text.empty()) toks.push_back(std::move(s));
        continue;
      }
      // Words and literals stay whole; only their edge punctuation splits off.
      const bool whole = !s.lexeme.empty() || s.literal;
      for (std::string& piece : whole ? tokens::split_phrase(s.text) : tokens::split(s.text)) {
        AnnotatedSpan t = s;
        if (!tokens::has_alnum(piece)) {
          t.lexeme.clear();
          t.modifier_lexemes.clear();
          t.literal = false;
          t.features.clear();
        }
        t.text = std::move(piece);
        toks.push_back(std::move(t));
      }
    }
    auto same_unit = [](const AnnotatedSpan& a, const AnnotatedSpan& b) {
      return a.formatting.bullet_index == b.formatting.bullet_index;
    };

    // Contractions.
    if (ctx.expertise.style.contractions) {
      const auto& list = pack && !pack->contractions.empty() ? pack->contractions : default_contractions();
      for (size_t i = 0; i + 1 < toks.size(); ++i) {
        AnnotatedSpan& a = toks[i];
        const AnnotatedSpan& b = toks[i + 1];
        if (!plain(a) || !plain(b) || a.provenance != Provenance::kGenerated ||
            b.provenance != Provenance::kGenerated || !same_unit(a, b) || a.literal || b.literal) {
          continue;
        }
        const std::string pair = text::lower(a.text) + " " + text::lower(b.text);
        for (const auto& [full, contracted] : list) {
          if (full == pair) {
            a.text = match_case(a.text, contracted);
            a.lexeme.clear();
            a.features.insert(b.features.begin(), b.features.end());
            toks.erase(toks.begin() + static_cast<std::ptrdiff_t>(i + 1));
            break;
          }
        }
      }
    }

    // Articles.
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
      AnnotatedSpan& a = toks[i];
      const std::string la = text::lower(a.text);
      if (!plain(a) || a.provenance != Provenance::kGenerated || !a.lexeme.empty() || (la != "a" && la != "an")) {
        continue;
      }
      if (!same_unit(a, toks[i + 1])) continue;
      a.text = match_case(a.text, article_an(toks[i + 1].text, pack) ? "an" : "a");
    }

    // Units: runs sharing a bullet index.
    std::vector<std::pair<size_t, size_t>> units;
    for (size_t i = 0; i < toks.size();) {
      size_t j = i + 1;
      while (j < toks.size() && same_unit(toks[i], toks[j])) ++j;
      units.emplace_back(i, j);
      i = j;
    }

    std::vector<AnnotatedSpan> out;
    for (auto [begin, end] : units) {
      std::vector<AnnotatedSpan> unit(toks.begin() + static_cast<std::ptrdiff_t>(begin),
                                      toks.begin() + static_cast<std::ptrdiff_t>(end));
      bool fragment = std::any_of(unit.begin(), unit.end(), [](const auto& s) { return s.formatting.fragment; });
      // Capitals.
      bool start = !fragment;
      for (AnnotatedSpan& t : unit) {
        if (start && tokens::has_alnum(t.text)) {
          for (char& c : t.text) {
            if (std::isalpha(static_cast<unsigned char>(c))) {
              c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
              break;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) break;
          }
          start = false;
        }
        if (!t.text.empty() && t.text.back() != ':' && tokens::is_terminal(t.text.back())) start = true;
      }
      // Terminal punctuation.
      if (!fragment && !unit.empty() && !tokens::is_terminal(unit.back().text.back())) {
        AnnotatedSpan dot;
        dot.text = ".";
        dot.formatting = unit.back().formatting;
        unit.push_back(std::move(dot));
      }
      // Spacing.
      for (size_t i = 0; i < unit.size(); ++i) {
        if (i > 0) {
          const bool space = !tokens::is_closing(unit[i].text.front()) && unit[i - 1].text != "(";
          if (space) {
            if (plain(out.back())) {
              out.back().text += " ";
            } else if (plain(unit[i])) {
              unit[i].text = " " + unit[i].text;
            } else {
              AnnotatedSpan sp;
              sp.text = " ";
              sp.formatting = unit[i].formatting;
              out.push_back(std::move(sp));
            }
          }
        }
        out.push_back(std::move(unit[i]));
      }
    }
    return out;
  }
};

}  // namespace

const LanguagePack* find_pack(std::string_view language) {
  static const EnglishPack english;
  if (language == english.language()) return &english;
  return nullptr;
}

std::vector<std::string> pack_languages() { return {"en"}; }

std::vector<AnnotatedSpan> realize_text(std::span<const TextPlan> plans, const RealizeContext& ctx) {
  const LanguagePack* pack = find_pack(ctx.expertise.language);
  if (!pack) {
    throw Error(ErrorCode::kConfiguration, ctx.expertise.language,
                "no language pack for '" + ctx.expertise.language + "'");
  }
  return pack->postprocess(pack->realize(plans, ctx), ctx);
}

std::string plain_text(const std::vector<AnnotatedSpan>& spans) {
  std::string out;
  for (size_t i = 0; i < spans.size(); ++i) {
    const AnnotatedSpan& s = spans[i];
    const bool new_unit = i == 0 || spans[i - 1].formatting.bullet_index != s.formatting.bullet_index;
    if (new_unit) {
      if (i > 0) out += "\n";
      if (s.formatting.bullet_index) out += "- ";
    }
    out += s.text;
  }
  return out;
}

}  // namespace hyperdoc
