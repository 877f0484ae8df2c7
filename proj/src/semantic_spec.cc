#include "hyperdoc/semantic_spec.h"

#include <cctype>
#include <sstream>

#include "hyperdoc/lexicon.h"

namespace hyperdoc {

std::string_view to_string(Process p) {
  switch (p) {
    case Process::kIdentity: return "IDENTITY";
    case Process::kAttributive: return "ATTRIBUTIVE";
    case Process::kLocative: return "LOCATIVE";
    case Process::kPartsPossession: return "PARTS-POSSESSION";
    case Process::kImperativeAction: return "IMPERATIVE-ACTION";
  }
  return "";
}

std::string_view to_string(Determiner d) {
  switch (d) {
    case Determiner::kNone: return "NONE";
    case Determiner::kIndefinite: return "INDEFINITE";
    case Determiner::kDefinite: return "DEFINITE";
  }
  return "";
}

bool ValuePlan::operator==(const ValuePlan& o) const {
  if (kind != o.kind || lexeme != o.lexeme || text != o.text || canned != o.canned || refs != o.refs) {
    return false;
  }
  if (!clause || !o.clause) return clause == o.clause;
  return *clause == *o.clause;
}

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

class SplWriter {
 public:
  SplWriter(const Lexicon* lexicon, int base) : lexicon_(lexicon), counter_(base) {}

  std::string word(const std::string& lexeme) const {
    if (lexicon_) {
      if (const LexicalEntry* e = lexicon_->find(lexeme)) return "|" + e->base_form + "|";
    }
    return "|" + lexeme + "|";
  }

  std::string fresh() { return "R" + std::to_string(++counter_); }

  std::string ref(const ReferringPlan& r, const std::string& label, const std::string& pad) {
    std::ostringstream os;
    os << "(" << label << " / " << word(r.head_lexeme);
    if (r.pronoun) os << " :PRONOUN YES";
    else os << " :DETERMINER " << to_string(r.determiner);
    if (!r.attributes.empty()) {
      os << "\n" << pad << ":RELATIONS (";
      for (size_t i = 0; i < r.attributes.size(); ++i) {
        if (i) os << "\n" << pad << "            ";
        os << "(" << fresh() << " / |" << r.attributes[i].attribute << "| :DOMAIN " << label
           << " :RANGE (" << fresh() << " / " << upper(r.attributes[i].value.to_source()) << "))";
      }
      os << ")";
    }
    os << ")";
    return os.str();
  }

  std::string value(const ValuePlan& v, const std::string& pad) {
    switch (v.kind) {
      case ValuePlan::Kind::kWord: return "(" + fresh() + " / " + word(v.lexeme) + ")";
      case ValuePlan::Kind::kLiteral: return "\"" + v.text + "\"";
      case ValuePlan::Kind::kReferences: {
        std::string out = "(";
        for (size_t i = 0; i < v.refs.size(); ++i) {
          if (i) out += "\n" + pad + " ";
          out += ref(v.refs[i], upper(v.refs[i].referent), pad + "  ");
        }
        return out + ")";
      }
      case ValuePlan::Kind::kClause: return spec(*v.clause, pad + "  ");
    }
    return "";
  }

  std::string spec(const SemanticSpec& s, const std::string& pad) {
    std::ostringstream os;
    os << "(" << s.node << " / " << to_string(s.process);
    if (s.mood != Mood::kDeclarative) os << " :MOOD " << (s.mood == Mood::kImperative ? "IMPERATIVE" : "INFINITIVE");
    const std::string inner = pad + "  ";
    if (s.domain) os << "\n" << inner << ":DOMAIN " << ref(*s.domain, upper(s.domain->referent), inner + "  ");
    if (s.range) {
      const std::string label = s.process == Process::kIdentity ? fresh() : upper(s.range->referent);
      os << "\n" << inner << ":RANGE " << ref(*s.range, label, inner + "  ");
      if (s.process == Process::kIdentity && !s.relations.empty()) {
        // Fold the modifiers into the range, as the trace shows them.
        std::string text = os.str();
        text.pop_back();
        os.str(text);
        os.seekp(0, std::ios::end);
        os << "\n" << inner << "  :RELATIONS (";
        for (size_t i = 0; i < s.relations.size(); ++i) {
          if (i) os << "\n" << inner << "              ";
          os << "(" << fresh() << " / |" << s.relations[i].attribute << "| :DOMAIN " << label
             << " :RANGE " << value(s.relations[i].value, inner + "    ") << ")";
        }
        os << "))";
      }
    }
    if (s.process == Process::kLocative) os << "\n" << inner << ":PREPOSITION |" << s.preposition << "|";
    if (s.process == Process::kAttributive) {
      for (const Relation& r : s.relations) {
        os << "\n" << inner << ":ATTRIBUTE (" << word(r.lexeme) << " " << value(r.value, inner + "  ") << ")";
      }
    }
    if (!s.items.empty()) {
      os << "\n" << inner << ":RANGE (LIST";
      if (s.bullet) os << " :BULLET YES";
      for (const ReferringPlan& r : s.items) os << "\n" << inner << "  " << ref(r, upper(r.referent), inner + "    ");
      os << ")";
    }
    if (s.process == Process::kImperativeAction) {
      os << "\n" << inner << ":PROCESS " << word(s.verb_lexeme) << " :ACTION " << upper(s.action)
         << " :TARGET " << upper(s.action_target);
      for (const RoleArg& a : s.roles) {
        os << "\n" << inner << ":" << upper(std::string(to_string(a.role))) << " ";
        if (!a.preposition.empty()) os << "|" << a.preposition << "| ";
        os << value(a.value, inner + "  ");
      }
    }
    if (s.bullet_index) os << "\n" << inner << ":BULLET-INDEX " << *s.bullet_index;
    os << ")";
    return os.str();
  }

 private:
  const Lexicon* lexicon_;
  int counter_;
};

}  // namespace

std::string to_spl(const TextPlan& plan, const Lexicon* lexicon) {
  if (const auto* canned = std::get_if<CannedPlan>(&plan)) {
    SplWriter w(lexicon, 1000);
    std::ostringstream os;
    os << "(" << canned->node << " / CANNED";
    for (const auto& seg : canned->segments) {
      if (seg.ref) os << "\n  :REF " << w.ref(*seg.ref, upper(seg.ref->referent), "    ");
      else os << "\n  :TEXT \"" << seg.text << "\"";
    }
    if (canned->bullet_index) os << "\n  :BULLET-INDEX " << *canned->bullet_index;
    os << ")";
    return os.str();
  }
  const SemanticSpec& spec = std::get<SemanticSpec>(plan);
  int base = 1000;
  if (spec.node.size() > 1) base = std::stoi(spec.node.substr(1)) * 100;
  SplWriter w(lexicon, base);
  return w.spec(spec, "");
}

}  // namespace hyperdoc
