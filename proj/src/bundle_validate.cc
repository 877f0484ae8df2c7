#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hyperdoc/bundle.h"
#include "hyperdoc/error.h"

namespace hyperdoc {
namespace {

class Validator {
 public:
  explicit Validator(const Bundle& b) : b_(b), kb_(b.kb) {}

  std::vector<Diagnostic> run() {
    check_ids();
    check_taxonomy();
    check_parts();
    check_inheritance();
    check_actions();
    check_lexicon();
    check_rules();
    check_models();
    check_profiles();
    check_coverage();
    check_content_standard();
    return std::move(out_);
  }

 private:
  void error(const SourceLocation& where, const std::string& id, std::string code,
             std::string message) {
    out_.push_back({Diagnostic::Severity::kError, std::move(code), where, id, std::move(message)});
  }
  void warning(const SourceLocation& where, const std::string& id, std::string code,
               std::string message) {
    out_.push_back(
        {Diagnostic::Severity::kWarning, std::move(code), where, id, std::move(message)});
  }

  bool resolves(const std::string& id) const {
    return kb_.contains(id) || kb_.find_action(id) != nullptr;
  }

  template <typename T, typename GetId, typename GetWhere>
  void duplicates(const std::vector<T>& items, const char* what, GetId get_id, GetWhere get_where) {
    std::map<std::string, SourceLocation> seen;
    for (const T& item : items) {
      const std::string& id = get_id(item);
      auto [it, inserted] = seen.emplace(id, get_where(item));
      if (!inserted) {
        error(get_where(item), id, "duplicate-id",
              std::string("duplicate ") + what + " id (first defined at " + it->second.file + ":" +
                  std::to_string(it->second.line) + ")");
      }
    }
  }

  void check_ids() {
    std::vector<std::pair<std::string, SourceLocation>> kb_ids;
    for (const Frame& f : kb_.nodes()) kb_ids.emplace_back(f.id, f.where);
    for (const ActionRep& a : kb_.actions()) kb_ids.emplace_back(a.id, a.where);
    duplicates(kb_ids, "KB", [](const auto& p) -> const std::string& { return p.first; },
               [](const auto& p) { return p.second; });
    std::vector<LexicalEntry> lex(b_.lexicon.entries().begin(), b_.lexicon.entries().end());
    duplicates(lex, "lexeme", [](const LexicalEntry& e) -> const std::string& { return e.id; },
               [](const LexicalEntry& e) { return e.where; });
    duplicates(b_.rules, "rule", [](const ContentRule& r) -> const std::string& { return r.id; },
               [](const ContentRule& r) { return r.where; });
    duplicates(b_.models, "expertise model",
               [](const ExpertiseModel& m) -> const std::string& { return m.id; },
               [](const ExpertiseModel& m) { return m.where; });
    duplicates(b_.profiles, "profile",
               [](const StandardProfile& p) -> const std::string& { return p.id; },
               [](const StandardProfile& p) { return p.where; });
    std::set<std::string> packs;
    for (const PackSettings& p : b_.pack_settings) {
      if (!packs.insert(p.language).second) {
        error({}, p.language, "duplicate-id", "duplicate pack settings for '" + p.language + "'");
      }
    }
  }

  void check_taxonomy() {
    std::vector<const Frame*> domain_roots, task_roots;
    for (const Frame& f : kb_.nodes()) {
      for (const Id& p : f.isa) {
        const Frame* parent = kb_.find(p);
        if (!parent) {
          error(f.where, f.id, "dangling-reference", "IS-A parent '" + p + "' does not exist");
        } else if (parent->kind == NodeKind::kInstance) {
          error(f.where, f.id, "isa-kind", "instance '" + p + "' cannot be an IS-A parent");
        } else if (parent->taxonomy() != f.taxonomy()) {
          error(f.where, f.id, "isa-kind",
                "IS-A parent '" + p + "' belongs to the other taxonomy");
        }
      }
      if (f.isa.empty()) {
        if (f.kind == NodeKind::kInstance) {
          error(f.where, f.id, "isa-kind", "instance needs at least one IS-A parent");
        } else {
          (f.kind == NodeKind::kTask ? task_roots : domain_roots).push_back(&f);
        }
      }
      if (std::find(f.isa.begin(), f.isa.end(), f.id) != f.isa.end() ||
          (kb_.contains(f.id) && kb_.find(f.id) == &f && reaches_self(f.id))) {
        error(f.where, f.id, "isa-cycle", "IS-A cycle through '" + f.id + "'");
      }
    }
    auto roots = [&](const std::vector<const Frame*>& found, const char* name) {
      if (found.empty()) {
        error({}, name, "root", std::string("the ") + name + " taxonomy has no root");
      }
      for (size_t i = 1; i < found.size(); ++i) {
        error(found[i]->where, found[i]->id, "root",
              std::string("second ") + name + " taxonomy root (first is '" + found[0]->id + "')");
      }
    };
    roots(domain_roots, "domain");
    roots(task_roots, "task");
  }

  bool reaches_self(const Id& id) const {
    std::set<Id> seen;
    std::vector<Id> stack(kb_.node(id).isa.begin(), kb_.node(id).isa.end());
    while (!stack.empty()) {
      Id cur = stack.back();
      stack.pop_back();
      if (cur == id) return true;
      const Frame* f = kb_.find(cur);
      if (!f || !seen.insert(cur).second) continue;
      stack.insert(stack.end(), f->isa.begin(), f->isa.end());
    }
    return false;
  }

  void check_parts() {
    std::map<Id, Id> parent_of;
    for (const Frame& f : kb_.nodes()) {
      for (const Id& part : f.parts) {
        const Frame* pf = kb_.find(part);
        if (!pf) {
          error(f.where, f.id, "dangling-reference", "part '" + part + "' does not exist");
          continue;
        }
        if (pf->taxonomy() != Taxonomy::kDomain || f.taxonomy() != Taxonomy::kDomain) {
          error(f.where, f.id, "part-of-kind", "task concepts cannot take part in Part-Of");
          continue;
        }
        auto [it, inserted] = parent_of.emplace(part, f.id);
        if (!inserted && it->second != f.id) {
          error(f.where, part, "part-of-multiple",
                "'" + part + "' is a part of both '" + it->second + "' and '" + f.id + "'");
        } else if (!inserted) {
          error(f.where, part, "duplicate-part", "'" + part + "' listed twice in '" + f.id + "'");
        }
      }
    }
    // Walk up the first-parent chain; report each cycle once.
    std::set<Id> reported;
    for (const auto& [start, unused] : parent_of) {
      std::vector<Id> path{start};
      Id cur = start;
      while (true) {
        auto it = parent_of.find(cur);
        if (it == parent_of.end()) break;
        cur = it->second;
        auto pos = std::find(path.begin(), path.end(), cur);
        if (pos != path.end()) {
          std::vector<Id> cycle(pos, path.end());
          Id first = *std::min_element(cycle.begin(), cycle.end());
          if (reported.insert(first).second) {
            std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), first), cycle.end());
            std::string list;
            for (const Id& n : cycle) list += n + " -> ";
            list += first;
            error(kb_.node(first).where, first, "part-of-cycle", "Part-Of cycle: " + list);
          }
          break;
        }
        path.push_back(cur);
      }
    }
  }

  bool ambiguous_slot(const Id& node, const std::string& attribute) const {
    try {
      kb_.inherit(node, attribute);
      return false;
    } catch (const Error&) {
      return true;
    }
  }

  bool ambiguous_action(const Id& node, const std::string& symbol) const {
    try {
      kb_.inherit_action(node, symbol);
      return false;
    } catch (const Error&) {
      return true;
    }
  }

  void check_inheritance() {
    std::set<std::string> attributes, symbols;
    for (const Frame& f : kb_.nodes()) {
      for (const Property& p : f.slots) attributes.insert(p.attribute);
      for (const auto& [sym, id] : f.actions) symbols.insert(sym);
    }
    // Reported where the conflict first arises, not at every descendant.
    auto report = [&](const Frame& f, const std::string& name, auto ambiguous, const char* what) {
      if (!ambiguous(f.id, name)) return;
      for (const Id& p : f.isa) {
        if (kb_.contains(p) && ambiguous(p, name)) return;
      }
      error(f.where, f.id, "inheritance-ambiguity",
            std::string("conflicting inherited ") + what + " '" + name +
                "' with no local override");
    };
    for (const Frame& f : kb_.nodes()) {
      if (kb_.find(f.id) != &f) continue;
      for (const std::string& a : attributes) {
        report(f, a, [&](const Id& n, const std::string& x) { return ambiguous_slot(n, x); },
               "default");
      }
      for (const std::string& s : symbols) {
        report(f, s, [&](const Id& n, const std::string& x) { return ambiguous_action(n, x); },
               "procedure");
      }
    }
    for (const Frame& f : kb_.nodes()) {
      std::vector<Id> refs;
      for (const Property& p : f.slots) collect_refs(p.value, refs);
      for (const Property& p : f.defining) collect_refs(p.value, refs);
      for (const Id& r : refs) {
        if (!resolves(r)) error(f.where, f.id, "dangling-reference", "slot refers to unknown '" + r + "'");
      }
      for (const auto& [sym, target] : f.actions) {
        if (!kb_.find_action(target)) {
          error(f.where, f.id, "dangling-reference",
                "action '" + sym + "' refers to unknown representation '" + target + "'");
        }
      }
      if (!f.lexical_anchor.empty()) {
        const LexicalEntry* e = b_.lexicon.find(f.lexical_anchor);
        if (!e) {
          error(f.where, f.id, "missing-lexeme", "lexical anchor '" + f.lexical_anchor + "' does not exist");
        } else if (e->part_of_speech != PartOfSpeech::kNoun) {
          error(f.where, f.id, "missing-lexeme", "lexical anchor '" + f.lexical_anchor + "' is not a noun");
        }
      }
    }
  }

  void check_filler(const ActionRep& a, const Filler& filler) {
    if (filler.kind == Filler::Kind::kEntity && !kb_.contains(filler.value)) {
      error(a.where, a.id, "dangling-reference", "action refers to unknown entity '" + filler.value + "'");
    }
  }

  void check_actions() {
    for (const ActionRep& a : kb_.actions()) {
      for (const auto& [role, filler] : a.roles) check_filler(a, filler);
      for (const auto& seg : a.segments) {
        if (seg.ref) check_filler(a, *seg.ref);
      }
      for (const Id& s : a.steps) {
        if (!kb_.find_action(s)) error(a.where, a.id, "dangling-reference", "unknown step '" + s + "'");
      }
      if (a.kind == ActionKind::kTcf || a.kind == ActionKind::kCaseFrame) {
        for (const std::string& lang : b_.language_packs()) {
          if (b_.lexicon.denoting(lang, a.verb, PartOfSpeech::kVerb).empty()) {
            error(a.where, a.id, "missing-lexeme",
                  "no '" + lang + "' verb lexeme for action '" + a.verb + "'");
          }
        }
      }
    }
    // Step graphs must be acyclic.
    std::map<Id, int> state;
    std::function<bool(const ActionRep&)> visit = [&](const ActionRep& a) {
      int& s = state[a.id];
      if (s == 1) return true;
      if (s == 2) return false;
      s = 1;
      for (const Id& step : a.steps) {
        if (const ActionRep* sub = kb_.find_action(step); sub && visit(*sub)) {
          if (state[a.id] != 3) {
            error(a.where, a.id, "step-cycle", "procedure steps loop back to '" + a.id + "'");
          }
          state[a.id] = 3;
          return false;
        }
      }
      if (state[a.id] == 1) state[a.id] = 2;
      return false;
    };
    for (const ActionRep& a : kb_.actions()) visit(a);
  }

  void check_lexicon() {
    for (const LexicalEntry& e : b_.lexicon.entries()) {
      if (e.base_form.empty()) error(e.where, e.id, "lexeme", "base form is empty");
      if (e.denotes.empty()) error(e.where, e.id, "lexeme", "lexeme denotes nothing");
      if (e.is_abbreviation()) {
        if (!b_.lexicon.find(e.abbreviation_of)) {
          error(e.where, e.id, "dangling-reference",
                "abbreviation of unknown lexeme '" + e.abbreviation_of + "'");
          continue;
        }
        std::set<std::string> seen{e.id};
        const LexicalEntry* cur = &e;
        while (cur && cur->is_abbreviation()) {
          if (!seen.insert(cur->abbreviation_of).second) {
            error(e.where, e.id, "abbreviation-cycle", "abbreviation chain loops");
            break;
          }
          cur = b_.lexicon.find(cur->abbreviation_of);
        }
      }
    }
  }

  std::set<std::string> interesting_attributes() const {
    std::set<std::string> out(b_.preferences.attribute_order.begin(),
                              b_.preferences.attribute_order.end());
    for (const ContentRule& r : b_.rules) out.insert(r.conveyed_attributes.begin(), r.conveyed_attributes.end());
    return out;
  }

  void check_rules() {
    const auto domain_root = kb_.root(Taxonomy::kDomain);
    const auto task_root = kb_.root(Taxonomy::kTask);
    for (const ContentRule& r : b_.rules) {
      const Frame* c = kb_.find(r.component_class);
      const Frame* t = kb_.find(r.task_class);
      if (!c) error(r.where, r.id, "dangling-reference", "unknown component class '" + r.component_class + "'");
      else if (c->taxonomy() != Taxonomy::kDomain) error(r.where, r.id, "rule", "component class is a task");
      if (!t) error(r.where, r.id, "dangling-reference", "unknown task class '" + r.task_class + "'");
      else if (t->taxonomy() != Taxonomy::kTask) error(r.where, r.id, "rule", "task class is not a task");
      for (const std::string& lang : b_.language_packs()) {
        for (const std::string& a : r.conveyed_attributes) {
          if (b_.lexicon.denoting(lang, a).empty()) {
            error(r.where, r.id, "missing-lexeme", "no '" + lang + "' lexeme names attribute '" + a + "'");
          }
        }
      }
    }
    if (domain_root && task_root && !kb_.components().empty()) {
      for (Question q : kAllQuestions) {
        bool found = std::any_of(b_.rules.begin(), b_.rules.end(), [&](const ContentRule& r) {
          return r.question == q && r.component_class == *domain_root && r.task_class == *task_root;
        });
        if (!found) {
          error({}, std::string(to_string(q)), "missing-default-rule",
                "no default rule for " + std::string(to_string(q)) + " at (" + *domain_root + ", " +
                    *task_root + ")");
        }
      }
    }
    // Two rules of equal specificity that can both match the same query.
    std::vector<Id> domain_nodes, task_nodes;
    for (const Frame& f : kb_.nodes()) (f.taxonomy() == Taxonomy::kTask ? task_nodes : domain_nodes).push_back(f.id);
    for (size_t i = 0; i < b_.rules.size(); ++i) {
      const ContentRule& a = b_.rules[i];
      if (!kb_.contains(a.component_class) || !kb_.contains(a.task_class)) continue;
      for (size_t j = i + 1; j < b_.rules.size(); ++j) {
        const ContentRule& c = b_.rules[j];
        if (a.question != c.question || !kb_.contains(c.component_class) || !kb_.contains(c.task_class)) continue;
        if (kb_.depth(a.component_class) != kb_.depth(c.component_class) ||
            kb_.depth(a.task_class) != kb_.depth(c.task_class)) {
          continue;
        }
        auto overlap = [&](const std::vector<Id>& nodes, const Id& x, const Id& y) {
          return std::any_of(nodes.begin(), nodes.end(), [&](const Id& n) {
            return kb_.subsumes(x, n) && kb_.subsumes(y, n);
          });
        };
        if (overlap(domain_nodes, a.component_class, c.component_class) &&
            overlap(task_nodes, a.task_class, c.task_class)) {
          error(c.where, c.id, "rule-tie",
                "rule ties with '" + a.id + "' at equal specificity for " +
                    std::string(to_string(a.question)));
        }
      }
    }
  }

  void check_language(const SourceLocation& where, const std::string& id, const std::string& lang) {
    const auto packs = b_.language_packs();
    if (!packs.empty() && std::find(packs.begin(), packs.end(), lang) == packs.end()) {
      error(where, id, "dangling-reference", "no language pack '" + lang + "'");
    }
  }

  void check_models() {
    for (const ExpertiseModel& m : b_.models) {
      check_language(m.where, m.id, m.language);
      for (const std::string& lex : m.known_lexemes) {
        const LexicalEntry* e = b_.lexicon.find(lex);
        if (!e) error(m.where, m.id, "dangling-reference", "unknown lexeme '" + lex + "'");
        else if (e->language != m.language) {
          error(m.where, m.id, "missing-lexeme", "lexeme '" + lex + "' is not in pack '" + m.language + "'");
        }
      }
    }
  }

  void check_profiles() {
    for (const StandardProfile& p : b_.profiles) {
      check_language(p.where, p.id, p.language);
      if (p.max_sentence_words < 1) error(p.where, p.id, "profile", "max-words must be at least 1");
      for (const auto* set : {&p.approved_lexemes, &p.banned_lexemes}) {
        for (const std::string& lex : *set) {
          if (!b_.lexicon.find(lex)) error(p.where, p.id, "dangling-reference", "unknown lexeme '" + lex + "'");
        }
      }
    }
  }

  // Every component can be named in every pack and by every model, and every
  // symbol value the planner may verbalize has a lexeme.
  void check_coverage() {
    const std::set<std::string> attrs = interesting_attributes();
    const std::vector<Id> components = kb_.components();
    for (const std::string& lang : b_.language_packs()) {
      for (const Id& c : components) {
        if (!named(c, lang, nullptr)) {
          error(kb_.node(c).where, c, "lexical-gap", "no '" + lang + "' noun names '" + c + "' or any ancestor");
        }
        for (const std::string& a : attrs) {
          std::optional<SlotValue> v;
          try {
            v = kb_.inherit(c, a);
          } catch (const Error&) {
            continue;  // reported as ambiguity
          }
          if (v && v->is(SlotValue::Kind::kSymbol) && b_.lexicon.denoting(lang, v->str()).empty()) {
            error(kb_.node(c).where, c, "missing-lexeme",
                  "no '" + lang + "' lexeme for value '" + v->str() + "' of '" + a + "'");
          }
        }
      }
    }
    for (const ExpertiseModel& m : b_.models) {
      for (const Id& c : components) {
        if (named(c, m.language, nullptr) && !named(c, m.language, &m)) {
          error(m.where, m.id, "lexical-gap", "model knows no full noun for '" + c + "'");
        }
      }
    }
  }

  bool named(const Id& node, const std::string& lang, const ExpertiseModel* model) const {
    for (const Id& a : kb_.ancestors_by_specificity(node)) {
      for (const LexicalEntry* e : nouns_for(b_.lexicon, kb_.node(a), lang)) {
        if (!model || (!e->is_abbreviation() && model->knows_lexeme(e->id))) return true;
      }
    }
    return false;
  }

  void check_content_standard() {
    for (const ContentRule& r : b_.rules) {
      if (r.required_attributes.empty() || !kb_.contains(r.component_class)) continue;
      for (const Id& c : kb_.components()) {
        if (!kb_.subsumes(r.component_class, c)) continue;
        for (const std::string& a : r.required_attributes) {
          bool present = false;
          try {
            present = kb_.inherit(c, a).has_value();
          } catch (const Error&) {
            present = true;
          }
          if (!present) {
            warning(kb_.node(c).where, c, "content-standard",
                    "rule '" + r.id + "' requires '" + a + "', which is missing");
          }
        }
      }
    }
  }

  const Bundle& b_;
  const KnowledgeBase& kb_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate_bundle(const Bundle& bundle) { return Validator(bundle).run(); }

}  // namespace hyperdoc
