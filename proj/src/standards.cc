#include "hyperdoc/standards.h"

#include <algorithm>
#include <set>

#include "hyperdoc/lexicon.h"
#include "text_util.h"
#include "tokens.h"

namespace hyperdoc {

bool StandardProfile::operator==(const StandardProfile& o) const {
  return id == o.id && max_sentence_words == o.max_sentence_words &&
         approve_all_in_pack == o.approve_all_in_pack && approved_lexemes == o.approved_lexemes &&
         banned_lexemes == o.banned_lexemes && banned_features == o.banned_features &&
         language == o.language;
}

namespace {

struct Token {
  std::string text;
  std::string lower;
  size_t span = 0;
  int sentence = 0;
  bool word = false;
};

const std::set<std::string>& gerund_exceptions() {
  static const std::set<std::string> s = {
      "thing", "things", "string", "spring", "ring", "bring", "sing", "king", "wing", "during",
      "nothing", "something", "anything", "everything", "ceiling", "bearing", "housing", "fitting",
      "wiring", "casing", "setting", "opening", "mounting", "tubing", "spacing", "coupling",
      "shielding", "lining", "warning", "caution", "sling", "swing", "cling", "fling", "sting"};
  return s;
}

const std::set<std::string>& participle_exceptions() {
  static const std::set<std::string> s = {"open", "often", "even", "then", "when", "green", "screen",
                                          "token", "kitchen", "linen", "need", "speed", "feed",
                                          "seed", "shed", "red", "bed", "fed", "ten", "seven",
                                          "eleven", "golden", "wooden", "between", "hidden"};
  return s;
}

// Function words accepted in external text without a lexeme.
const std::set<std::string>& function_words() {
  static const std::set<std::string> s = {
      "a", "an", "the", "it", "its", "it's", "is", "are", "was", "were", "be", "been", "has", "have",
      "had", "do", "does", "did", "not", "don't", "doesn't", "isn't", "and", "or", "but", "of",
      "to", "in", "on", "at", "by", "for", "from", "with", "into", "onto", "out", "off", "up",
      "down", "over", "under", "along", "through", "these", "this", "that", "those", "there",
      "what", "where", "how", "i", "you", "your", "they", "them", "their", "any", "all", "each",
      "parts", "part", "purpose", "if", "then", "as", "so", "no", "yes"};
  return s;
}

bool gerund(const std::string& w) {
  return w.size() > 4 && w.ends_with("ing") && !gerund_exceptions().contains(w);
}

bool participle(const std::string& w) {
  return w.size() > 3 && (w.ends_with("ed") || w.ends_with("en")) && !participle_exceptions().contains(w);
}

bool be_form(const std::string& w) {
  return w == "is" || w == "are" || w == "was" || w == "were" || w == "be" || w == "been" || w == "being";
}

bool complex_pair(const std::string& a, const std::string& b) {
  if ((a == "has" || a == "have" || a == "had") && b == "been") return true;
  if (a == "will" && (b == "have" || b == "be")) return true;
  if (a == "would" && b == "have") return true;
  return (a == "is" || a == "are" || a == "was" || a == "were") && b == "being";
}

std::string strip_word(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (text::is_word_char(c)) out += c;
  }
  return text::lower(out);
}

}  // namespace

std::vector<Violation> check_text(const std::vector<AnnotatedSpan>& spans,
                                  const StandardProfile& profile, const Lexicon* lexicon) {
  std::vector<Token> toks;
  int sentence = 0;
  bool open = false;  // current sentence has tokens
  for (size_t i = 0; i < spans.size(); ++i) {
    if (i > 0 && spans[i].formatting.bullet_index != spans[i - 1].formatting.bullet_index && open) {
      ++sentence;
      open = false;
    }
    for (std::string& piece : tokens::split(spans[i].text)) {
      Token t;
      t.lower = strip_word(piece);
      t.word = tokens::has_alnum(piece);
      t.text = std::move(piece);
      t.span = i;
      t.sentence = sentence;
      open = true;
      const bool end = t.text.size() == 1 && tokens::is_terminal(t.text[0]);
      toks.push_back(std::move(t));
      if (end) {
        ++sentence;
        open = false;
      }
    }
  }

  std::vector<Violation> out;
  auto severity_of = [&](size_t span) {
    return spans[span].provenance == Provenance::kCanned ? Violation::Severity::kAdvisory
                                                         : Violation::Severity::kError;
  };

  // Sentence length.
  for (size_t b = 0; b < toks.size();) {
    size_t e = b;
    while (e < toks.size() && toks[e].sentence == toks[b].sentence) ++e;
    int count = 0;
    bool canned = false;
    const Token* excess = nullptr;
    for (size_t k = b; k < e; ++k) {
      canned |= spans[toks[k].span].provenance == Provenance::kCanned;
      if (!toks[k].word) continue;
      if (++count == profile.max_sentence_words + 1) excess = &toks[k];
    }
    if (excess) {
      out.push_back({"max-sentence-words", excess->sentence, excess->text,
                     canned ? Violation::Severity::kAdvisory : Violation::Severity::kError,
                     "sentence has " + std::to_string(count) + " words; the limit is " +
                         std::to_string(profile.max_sentence_words)});
    }
    b = e;
  }

  // Vocabulary and features of generated spans.
  std::vector<bool> seen(spans.size(), false);
  for (const Token& t : toks) {
    if (seen[t.span]) continue;
    seen[t.span] = true;
    const AnnotatedSpan& s = spans[t.span];
    if (s.provenance != Provenance::kGenerated || s.literal) continue;
    std::vector<std::string> lexemes = s.modifier_lexemes;
    if (!s.lexeme.empty()) lexemes.insert(lexemes.begin(), s.lexeme);
    for (const std::string& lx : lexemes) {
      if (profile.banned_lexemes.contains(lx)) {
        out.push_back({"banned-word", t.sentence, s.text, Violation::Severity::kError,
                       "lexeme '" + lx + "' is banned by profile '" + profile.id + "'"});
      } else if (!profile.approve_all_in_pack && !profile.approved_lexemes.contains(lx)) {
        out.push_back({"unapproved-word", t.sentence, s.text, Violation::Severity::kError,
                       "lexeme '" + lx + "' is not approved by profile '" + profile.id + "'"});
      }
    }
    for (const std::string& f : s.features) {
      if (profile.banned_features.contains(f)) {
        out.push_back({f, t.sentence, s.text, Violation::Severity::kError,
                       "'" + s.text + "' has the banned feature " + f});
      }
    }
  }

  // Surface heuristics for canned and external text.
  auto heuristic = [&](size_t k) {
    return toks[k].word && spans[toks[k].span].provenance != Provenance::kGenerated;
  };
  auto banned = [&](const char* f) { return profile.banned_features.contains(f); };
  for (size_t k = 0; k < toks.size(); ++k) {
    if (!heuristic(k)) continue;
    const Token& t = toks[k];
    if (banned(kGerundForm) && gerund(t.lower)) {
      out.push_back({kGerundForm, t.sentence, t.text, severity_of(t.span), "'" + t.text + "' looks like a gerund"});
    }
    if (k == 0 || toks[k - 1].sentence != t.sentence) continue;
    const std::string& prev = toks[k - 1].lower;
    if (banned(kComplexTense) && complex_pair(prev, t.lower)) {
      out.push_back({kComplexTense, t.sentence, t.text, severity_of(t.span),
                     "'" + toks[k - 1].text + " " + t.text + "' is a complex tense"});
    }
    if (banned(kPassivePattern) && be_form(prev) && participle(t.lower)) {
      out.push_back({kPassivePattern, t.sentence, t.text, severity_of(t.span),
                     "'" + toks[k - 1].text + " " + t.text + "' looks passive"});
    }
  }

  // Vocabulary of external text, when a lexicon supplies it.
  if (lexicon) {
    std::set<std::string> approved, forbidden;
    for (const LexicalEntry& e : lexicon->entries()) {
      if (e.language != profile.language) continue;
      std::set<std::string>* target = nullptr;
      if (profile.banned_lexemes.contains(e.id)) target = &forbidden;
      else if (profile.approve_all_in_pack || profile.approved_lexemes.contains(e.id)) target = &approved;
      if (!target) continue;
      for (const std::string& w : text::words(e.base_form)) target->insert(text::lower(w));
      for (const auto& [feature, form] : e.irregular_forms) {
        for (const std::string& w : text::words(form)) target->insert(text::lower(w));
      }
    }
    auto known = [&](const std::string& w) {
      if (approved.contains(w) || function_words().contains(w)) return true;
      for (const char* suffix : {"s", "es", "ed", "d", "ing"}) {
        std::string_view sv(suffix);
        if (w.size() > sv.size() + 1 && w.ends_with(sv) && approved.contains(w.substr(0, w.size() - sv.size()))) {
          return true;
        }
      }
      return false;
    };
    for (const Token& t : toks) {
      const AnnotatedSpan& s = spans[t.span];
      if (s.provenance != Provenance::kExternal || !t.word) continue;
      if (std::any_of(t.lower.begin(), t.lower.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        continue;
      }
      if (forbidden.contains(t.lower)) {
        out.push_back({"banned-word", t.sentence, t.text, Violation::Severity::kError,
                       "'" + t.text + "' is banned by profile '" + profile.id + "'"});
      } else if (!known(t.lower)) {
        out.push_back({"unapproved-word", t.sentence, t.text, Violation::Severity::kError,
                       "'" + t.text + "' is not in the approved vocabulary"});
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) { return a.sentence < b.sentence; });
  return out;
}

std::vector<AnnotatedSpan> spans_from_text(const std::string& text) {
  std::vector<AnnotatedSpan> out;
  int bullet = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line(text::trim(std::string_view(text).substr(pos, nl - pos)));
    pos = nl + 1;
    if (line.empty()) continue;
    AnnotatedSpan s;
    s.provenance = Provenance::kExternal;
    if (line.rfind("- ", 0) == 0) {
      s.formatting.bullet_index = bullet++;
      line = line.substr(2);
    }
    s.text = line;
    if (!out.empty() && !s.formatting.bullet_index && !out.back().formatting.bullet_index) {
      out.back().text += " " + line;
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const Violation& v) {
  return std::string(v.severity == Violation::Severity::kAdvisory ? "advisory" : "error") + " [" + v.rule +
         "] sentence " + std::to_string(v.sentence + 1) + " at '" + v.token + "': " + v.message;
}

}  // namespace hyperdoc
