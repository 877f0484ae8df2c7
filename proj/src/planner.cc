#include "hyperdoc/planner.h"

#include <algorithm>

#include "hyperdoc/error.h"

namespace hyperdoc {

std::vector<std::vector<CategorizedFact>> aggregate(std::span<const CategorizedFact> facts) {
  std::vector<std::vector<CategorizedFact>> groups;
  std::vector<std::string> open_category;  // category of each group still accepting facts
  for (const CategorizedFact& f : facts) {
    auto it = std::find(open_category.begin(), open_category.end(), f.category);
    if (it == open_category.end()) {
      groups.push_back({f});
      open_category.push_back(f.category);
      continue;
    }
    size_t g = static_cast<size_t>(it - open_category.begin());
    groups[g].push_back(f);
    if (groups[g].size() == kAggregationCap) {
      // Full: later facts of this category start a new group.
      open_category[g] = std::string("\x01") + open_category[g];
    }
  }
  return groups;
}

namespace {

const LexicalEntry* pick_head(const std::vector<const LexicalEntry*>& cands, bool allow_abbrev) {
  const LexicalEntry* best = nullptr;
  auto rank = [&](const LexicalEntry* e) {
    return std::make_pair(e->basic_level ? 1 : 0, allow_abbrev && e->is_abbreviation() ? 1 : 0);
  };
  for (const LexicalEntry* e : cands) {
    if (!best || rank(e) > rank(best)) best = e;
  }
  return best;
}

bool has_value(const KnowledgeBase& kb, const Id& node, const std::string& attr, const SlotValue& v) {
  try {
    auto got = kb.inherit(node, attr);
    return got && *got == v;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

ReferringPlan gen_reference(const Id& referent, std::span<const Id> focus,
                            const ExpertiseModel& expertise, const Bundle& bundle,
                            const ReferenceOptions& options) {
  const KnowledgeBase& kb = bundle.kb;
  const std::string& lang = expertise.language;
  const bool allow_abbrev = !options.unabbreviate && expertise.style.allow_abbreviations;

  ReferringPlan out;
  out.referent = referent;
  for (const Id& node : kb.ancestors_by_specificity(referent)) {
    std::vector<const LexicalEntry*> cands;
    for (const LexicalEntry* e : nouns_for(bundle.lexicon, kb.node(node), lang)) {
      if (!expertise.knows_lexeme(e->id)) continue;
      if (e->is_abbreviation() && !allow_abbrev) continue;
      cands.push_back(e);
    }
    if (const LexicalEntry* head = pick_head(cands, allow_abbrev)) {
      out.head_lexeme = head->id;
      out.head_concept = node;
      break;
    }
  }
  if (out.head_lexeme.empty()) {
    throw Error(ErrorCode::kLexicalGap, referent,
                "no noun known to model '" + expertise.id + "' names '" + referent +
                    "' in language pack '" + lang + "'");
  }
  if (options.predicative) {
    out.determiner = Determiner::kIndefinite;
    return out;
  }
  out.determiner = Determiner::kDefinite;
  for (const Id& x : focus) {
    if (x != referent && kb.contains(x) &&
        std::find(out.distractors.begin(), out.distractors.end(), x) == out.distractors.end() &&
        kb.subsumes(out.head_concept, x)) {
      out.distractors.push_back(x);
    }
  }
  std::vector<Id> remaining = out.distractors;
  for (const std::string& attr : bundle.preferences.attribute_order) {
    if (remaining.empty()) break;
    std::optional<SlotValue> v;
    try {
      v = kb.inherit(referent, attr);
    } catch (const Error&) {
      continue;
    }
    if (!v || !v->is(SlotValue::Kind::kSymbol) || bundle.lexicon.denoting(lang, v->str()).empty()) {
      continue;
    }
    auto kept = std::stable_partition(remaining.begin(), remaining.end(),
                                      [&](const Id& d) { return has_value(kb, d, attr, *v); });
    if (kept == remaining.end()) continue;  // removes nobody
    remaining.erase(kept, remaining.end());
    out.attributes.push_back({attr, *v});
  }
  out.distinguishing = remaining.empty();
  return out;
}

bool pronoun_allowed(const Id& referent, const DiscourseState& state, const Id& topic) {
  if (!(state.last_center == referent || referent == topic)) return false;
  if (state.focus.empty()) return true;
  return state.focus.front() == referent;
}

namespace {

class Planner {
 public:
  Planner(const Bundle& bundle, const ExpertiseModel& model)
      : bundle_(bundle), kb_(bundle.kb), model_(model), lang_(model.language) {}

  std::string next_node() { return "S" + std::to_string(++counter_); }

  std::string category_of(const std::string& attr) const {
    for (const LexicalEntry* e : bundle_.lexicon.denoting(lang_, attr)) {
      if (!e->attribute_category.empty()) return e->attribute_category;
    }
    return attr;
  }

  std::string attribute_lexeme(const std::string& attr) const {
    auto found = bundle_.lexicon.denoting(lang_, attr);
    if (found.empty()) {
      throw Error(ErrorCode::kLexicalGap, attr,
                  "no lexeme for attribute '" + attr + "' in language pack '" + lang_ + "'");
    }
    return found.front()->id;
  }

  std::string value_word(const std::string& symbol) const {
    auto found = bundle_.lexicon.denoting(lang_, symbol, PartOfSpeech::kAdjective);
    if (found.empty()) found = bundle_.lexicon.denoting(lang_, symbol);
    return found.empty() ? "" : found.front()->id;
  }

  ReferringPlan reference(const Id& id, std::span<const Id> context, bool unabbreviate) const {
    return gen_reference(id, context, model_, bundle_, {unabbreviate, false});
  }

  ValuePlan value_plan(const SlotValue& v, std::vector<Id> context, bool unabbreviate,
                       const Id& component) {
    ValuePlan out;
    switch (v.kind()) {
      case SlotValue::Kind::kSymbol:
        out.lexeme = value_word(v.str());
        if (out.lexeme.empty()) {
          out.kind = ValuePlan::Kind::kLiteral;
          out.text = v.str();
        } else {
          out.kind = ValuePlan::Kind::kWord;
        }
        return out;
      case SlotValue::Kind::kNumber:
        out.kind = ValuePlan::Kind::kLiteral;
        out.text = format_number(v.as_number().value);
        if (!v.as_number().unit.empty()) out.text += " " + v.as_number().unit;
        return out;
      case SlotValue::Kind::kText:
        out.kind = ValuePlan::Kind::kLiteral;
        out.text = v.str();
        return out;
      case SlotValue::Kind::kRef:
        if (const ActionRep* rep = kb_.find_action(v.str()); rep && !kb_.contains(v.str())) {
          return clause_plan(*rep, component, context, unabbreviate);
        }
        out.kind = ValuePlan::Kind::kReferences;
        context.push_back(v.str());
        out.refs.push_back(reference(v.str(), context, unabbreviate));
        return out;
      case SlotValue::Kind::kList: {
        bool all_refs = !v.items().empty() && std::all_of(v.items().begin(), v.items().end(), [&](const SlotValue& x) {
          return x.is(SlotValue::Kind::kRef) && kb_.contains(x.str());
        });
        if (all_refs) {
          out.kind = ValuePlan::Kind::kReferences;
          for (const SlotValue& x : v.items()) context.push_back(x.str());
          for (const SlotValue& x : v.items()) out.refs.push_back(reference(x.str(), context, unabbreviate));
          return out;
        }
        out.kind = ValuePlan::Kind::kLiteral;
        std::vector<std::string> words;
        for (const SlotValue& x : v.items()) {
          if (x.is(SlotValue::Kind::kSymbol)) {
            const LexicalEntry* e = bundle_.lexicon.find(value_word(x.str()));
            words.push_back(e ? e->base_form : x.str());
          } else if (x.is(SlotValue::Kind::kNumber)) {
            words.push_back(format_number(x.as_number().value) +
                            (x.as_number().unit.empty() ? "" : " " + x.as_number().unit));
          } else {
            words.push_back(x.str());
          }
        }
        for (size_t i = 0; i < words.size(); ++i) {
          if (i > 0) out.text += i + 1 == words.size() ? " and " : ", ";
          out.text += words[i];
        }
        return out;
      }
    }
    return out;
  }

  ValuePlan clause_plan(const ActionRep& rep, const Id& component, const std::vector<Id>& context,
                        bool unabbreviate) {
    ValuePlan out;
    if (rep.kind == ActionKind::kCanned || rep.kind == ActionKind::kEkr) {
      out.kind = ValuePlan::Kind::kLiteral;
      out.canned = true;
      out.text = rep.kind == ActionKind::kCanned ? rep.text : ekr_source(rep.segments);
      return out;
    }
    SemanticSpec spec = imperative(rep, component, context, unabbreviate);
    spec.mood = Mood::kInfinitive;
    out.kind = ValuePlan::Kind::kClause;
    out.clause = std::make_shared<const SemanticSpec>(std::move(spec));
    return out;
  }

  Id bind(const Filler& f, const Id& component, const ActionRep& rep) const {
    Id id;
    switch (f.kind) {
      case Filler::Kind::kSelf: id = component; break;
      case Filler::Kind::kParent: {
        auto parent = kb_.part_of(component);
        if (!parent) {
          throw Error(ErrorCode::kReference, rep.id,
                      "'" + rep.id + "' refers to the Part-Of parent of '" + component +
                          "', which has none");
        }
        id = *parent;
        break;
      }
      default: id = f.value;
    }
    if (!kb_.contains(id)) {
      throw Error(ErrorCode::kReference, rep.id, "'" + rep.id + "' refers to unknown entity '" + id + "'");
    }
    return id;
  }

  std::vector<Id> mentioned_by(const ActionRep& rep, const Id& component) const {
    std::vector<Id> out;
    for (const auto& [role, filler] : rep.roles) {
      if (filler.is_reference() && role != Role::kActor) out.push_back(bind(filler, component, rep));
    }
    for (const auto& seg : rep.segments) {
      if (seg.ref) out.push_back(bind(*seg.ref, component, rep));
    }
    return out;
  }

  SemanticSpec imperative(const ActionRep& rep, const Id& component, std::vector<Id> context,
                          bool unabbreviate) {
    SemanticSpec spec;
    spec.node = next_node();
    spec.process = Process::kImperativeAction;
    spec.mood = Mood::kImperative;
    spec.action = rep.verb;
    auto verbs = bundle_.lexicon.denoting(lang_, rep.verb, PartOfSpeech::kVerb);
    if (verbs.empty()) {
      throw Error(ErrorCode::kLexicalGap, rep.verb,
                  "no verb for action '" + rep.verb + "' in language pack '" + lang_ + "'");
    }
    const LexicalEntry& verb = *verbs.front();
    spec.verb_lexeme = verb.id;
    for (const Id& m : mentioned_by(rep, component)) context.push_back(m);
    spec.action_target = component;
    if (const Filler* actee = rep.role(Role::kActee); actee && actee->is_reference()) {
      spec.action_target = bind(*actee, component, rep);
    }
    for (Role role : {Role::kActee, Role::kSource, Role::kDestination, Role::kManner}) {
      const Filler* f = rep.role(role);
      if (!f) continue;
      RoleArg arg;
      arg.role = role;
      if (role == Role::kSource || role == Role::kDestination) {
        auto it = verb.role_prepositions.find(std::string(to_string(role)));
        arg.preposition = it != verb.role_prepositions.end() ? it->second
                          : role == Role::kSource            ? "from"
                                                             : "to";
      }
      if (f->kind == Filler::Kind::kText) {
        arg.value.kind = ValuePlan::Kind::kLiteral;
        arg.value.text = f->value;
        arg.value.canned = true;
      } else {
        arg.value.kind = ValuePlan::Kind::kReferences;
        arg.value.refs.push_back(reference(bind(*f, component, rep), context, unabbreviate));
      }
      spec.roles.push_back(std::move(arg));
    }
    return spec;
  }

  void expand(const ActionRep& rep, const Id& component, std::span<const Id> focus,
              bool unabbreviate, std::vector<TextPlan>& out, int depth) {
    std::vector<Id> context(focus.begin(), focus.end());
    switch (rep.kind) {
      case ActionKind::kCanned: {
        CannedPlan c;
        c.node = next_node();
        c.segments.push_back({rep.text, std::nullopt});
        out.emplace_back(std::move(c));
        return;
      }
      case ActionKind::kEkr: {
        for (const Id& m : mentioned_by(rep, component)) context.push_back(m);
        CannedPlan c;
        c.node = next_node();
        for (const auto& seg : rep.segments) {
          if (seg.ref) {
            c.segments.push_back({"", reference(bind(*seg.ref, component, rep), context, unabbreviate)});
          } else {
            c.segments.push_back({seg.text, std::nullopt});
          }
        }
        out.emplace_back(std::move(c));
        return;
      }
      case ActionKind::kTcf:
      case ActionKind::kCaseFrame:
        break;
    }
    if (!model_.knows_action(rep.verb) && depth < 8) {
      // Unknown action: spell it out through its decomposition when there is one.
      Id target = component;
      if (const Filler* actee = rep.role(Role::kActee); actee && actee->is_reference()) {
        target = bind(*actee, component, rep);
      }
      const ActionRep* sub = nullptr;
      Id sub_component = component;
      if (!rep.steps.empty()) {
        sub = &rep;
      } else {
        try {
          sub = kb_.inherit_action(target, rep.verb);
          sub_component = target;
        } catch (const Error&) {
          sub = nullptr;
        }
      }
      // A decomposition already being expanded would restate itself.
      if (sub && !sub->steps.empty() && std::find(active_.begin(), active_.end(), sub) == active_.end()) {
        active_.push_back(sub);
        for (const Id& s : sub->steps) {
          if (const ActionRep* step = kb_.find_action(s)) {
            expand(*step, sub_component, focus, unabbreviate, out, depth + 1);
          }
        }
        active_.pop_back();
        return;
      }
    }
    out.emplace_back(imperative(rep, component, context, unabbreviate));
  }

  std::vector<TextPlan> run(const ContentPlan& plan, const QuestionPoint& point,
                            const DiscourseState& state);

  // Procedures whose steps are being expanded.
  std::vector<const ActionRep*> active_;

 private:
  const Bundle& bundle_;
  const KnowledgeBase& kb_;
  const ExpertiseModel& model_;
  std::string lang_;
  int counter_ = 0;
};

const ExpertiseModel& model_for(const Bundle& bundle, const std::string& id) {
  const ExpertiseModel* m = bundle.find_model(id);
  if (!m) throw Error(ErrorCode::kLookup, id, "unknown expertise model '" + id + "'");
  return *m;
}

std::vector<TextPlan> Planner::run(const ContentPlan& plan, const QuestionPoint& point,
                                   const DiscourseState& state) {
  const Id& topic = plan.topic;
  const Id topic_list[] = {topic};
  const DiscourseState st = update_focus(state, topic_list);
  const bool unabbrev = plan.unabbreviate;

  ReferringPlan domain = reference(topic, st.focus, unabbrev);
  domain.pronoun = pronoun_allowed(topic, st, topic);

  std::vector<CategorizedFact> facts;
  for (const Property& f : plan.facts) facts.push_back({f, category_of(f.attribute)});
  auto groups = aggregate(facts);

  std::vector<TextPlan> out;
  auto attributive = [&](const std::vector<CategorizedFact>& group) {
    SemanticSpec spec;
    spec.node = next_node();
    spec.process = Process::kAttributive;
    spec.domain = domain;
    std::vector<Id> context = st.focus;
    for (const CategorizedFact& f : group) collect_refs(f.fact.value, context);
    for (const CategorizedFact& f : group) {
      spec.relations.push_back({f.fact.attribute, attribute_lexeme(f.fact.attribute),
                                value_plan(f.fact.value, context, unabbrev, topic)});
    }
    out.emplace_back(std::move(spec));
  };

  switch (plan.schema) {
    case Schema::kIdentify: {
      SemanticSpec spec;
      spec.node = next_node();
      spec.process = Process::kIdentity;
      spec.domain = domain;
      spec.range = gen_reference(topic, st.focus, model_, bundle_, {unabbrev, true});
      const auto& mods = bundle_.preferences.modifier_categories;
      size_t first_group = 0;
      if (!groups.empty() &&
          std::find(mods.begin(), mods.end(), groups[0].front().category) != mods.end()) {
        for (const CategorizedFact& f : groups[0]) {
          spec.relations.push_back({f.fact.attribute, attribute_lexeme(f.fact.attribute),
                                    value_plan(f.fact.value, st.focus, unabbrev, topic)});
        }
        first_group = 1;
      }
      out.emplace_back(std::move(spec));
      for (size_t g = first_group; g < groups.size(); ++g) attributive(groups[g]);
      break;
    }
    case Schema::kSpecs:
    case Schema::kPurpose:
    case Schema::kConnections:
      for (const auto& g : groups) attributive(g);
      break;
    case Schema::kLocation: {
      SemanticSpec spec;
      spec.node = next_node();
      spec.process = Process::kLocative;
      spec.domain = domain;
      std::vector<Id> context = st.focus;
      context.push_back(*plan.container);
      spec.range = reference(*plan.container, context, unabbrev);
      spec.preposition = plan.preposition;
      out.emplace_back(std::move(spec));
      break;
    }
    case Schema::kPartsList: {
      SemanticSpec spec;
      spec.node = next_node();
      spec.process = Process::kPartsPossession;
      spec.domain = domain;
      spec.bullet = plan.bullet;
      std::vector<Id> context = st.focus;
      context.insert(context.end(), plan.parts.begin(), plan.parts.end());
      for (const Id& part : plan.parts) spec.items.push_back(reference(part, context, unabbrev));
      out.emplace_back(std::move(spec));
      break;
    }
    case Schema::kProcedure: {
      if (const ActionRep* proc = kb_.inherit_action(topic, plan.action)) active_.push_back(proc);
      for (const Id& step_id : plan.steps) {
        expand(kb_.action(step_id), topic, st.focus, unabbrev, out, 0);
      }
      if (plan.bullet) {
        int index = 0;
        for (TextPlan& tp : out) {
          std::visit([&](auto& p) { p.bullet_index = index++; }, tp);
        }
      }
      break;
    }
  }
  (void)point;
  return out;
}

}  // namespace

std::vector<TextPlan> expand_hybrid(const ActionRep& rep, const Id& component,
                                    std::span<const Id> focus, const ExpertiseModel& expertise,
                                    const Bundle& bundle) {
  Planner planner(bundle, expertise);
  std::vector<TextPlan> out;
  planner.active_.push_back(&rep);
  if (rep.steps.empty()) {
    planner.expand(rep, component, focus, false, out, 0);
    return out;
  }
  for (const Id& s : rep.steps) planner.expand(bundle.kb.action(s), component, focus, false, out, 0);
  return out;
}

std::vector<TextPlan> plan_sentences(const ContentPlan& plan, const QuestionPoint& point,
                                     const DiscourseState& state, const Bundle& bundle) {
  Planner planner(bundle, model_for(bundle, point.expertise));
  return planner.run(plan, point, state);
}

}  // namespace hyperdoc
