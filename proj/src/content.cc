#include "hyperdoc/content.h"

#include <algorithm>
#include <cctype>

#include "hyperdoc/error.h"

namespace hyperdoc {

std::string default_action(const KnowledgeBase& kb, std::string_view task) {
  if (auto v = kb.inherit(task, "action"); v && v->is(SlotValue::Kind::kSymbol)) return v->str();
  return "use";
}

namespace {

Error absent(const Id& topic, Question q, const std::string& what) {
  return Error(ErrorCode::kKnowledgeAbsent, topic,
               "the knowledge base has no " + what + " for '" + topic + "' (" +
                   std::string(to_string(q)) + ")");
}

ContentPlan plan(const QuestionPoint& point, const Bundle& bundle, bool with_followups) {
  const KnowledgeBase& kb = bundle.kb;
  const ContentRule& rule = resolve_rule(point.question, point.component, point.task, bundle.rules, kb);
  ContentPlan out;
  out.rule_id = rule.id;
  out.schema = rule.schema;
  out.topic = point.component;
  out.bullet = rule.bullet;
  out.unabbreviate = rule.unabbreviate;
  for (const std::string& a : rule.conveyed_attributes) {
    if (auto v = kb.inherit(point.component, a)) out.facts.push_back({a, *v});
  }

  switch (rule.schema) {
    case Schema::kIdentify:
      break;
    case Schema::kLocation: {
      out.container = kb.part_of(point.component);
      if (!out.container) throw absent(point.component, point.question, "location");
      auto prep = kb.inherit(point.component, "preposition");
      out.preposition = prep && prep->is(SlotValue::Kind::kSymbol) ? prep->str() : "in";
      break;
    }
    case Schema::kPartsList:
      out.parts = kb.parts_of(point.component);
      if (out.parts.empty()) throw absent(point.component, point.question, "parts");
      break;
    case Schema::kSpecs:
    case Schema::kPurpose:
    case Schema::kConnections:
      if (out.facts.empty()) {
        throw absent(point.component, point.question,
                     rule.schema == Schema::kSpecs     ? "specifications"
                     : rule.schema == Schema::kPurpose ? "purpose"
                                                       : "connections");
      }
      break;
    case Schema::kProcedure: {
      out.action = point.action.empty() ? default_action(kb, point.task) : point.action;
      const ActionRep* rep = kb.inherit_action(point.component, out.action);
      if (!rep) {
        throw Error(ErrorCode::kNoProcedure, point.component,
                    "the knowledge base has no '" + out.action + "' procedure for '" +
                        point.component + "'");
      }
      if (rep->steps.empty()) out.steps = {rep->id};
      else out.steps = rep->steps;
      break;
    }
  }
  if (with_followups) {
    out.followups = filter_followups(rule.candidate_followups, point.component, point.task, bundle);
  }
  return out;
}

}  // namespace

ContentPlan plan_content(const QuestionPoint& point, const Bundle& bundle) {
  bundle.kb.node(point.component);
  if (bundle.kb.node(point.task).kind != NodeKind::kTask) {
    throw Error(ErrorCode::kLookup, point.task, "'" + point.task + "' is not a task");
  }
  return plan(point, bundle, true);
}

std::vector<Question> filter_followups(std::span<const Question> candidates, const Id& topic,
                                       const Id& task, const Bundle& bundle) {
  std::vector<Question> out;
  for (Question q : candidates) {
    QuestionPoint probe;
    probe.question = q;
    probe.component = topic;
    probe.task = task;
    try {
      plan(probe, bundle, false);
      out.push_back(q);
    } catch (const Error& e) {
      if (!is_knowledge_absence(e.code())) throw;
    }
  }
  return out;
}

std::string followup_label(Question question, std::string_view action) {
  switch (question) {
    case Question::kWhatIsIt: return "WHAT";
    case Question::kWhereIsIt: return "WHERE";
    case Question::kWhatAreItsParts: return "PARTS";
    case Question::kWhatAreItsSpecs: return "SPECS";
    case Question::kWhatIsItsPurpose: return "PURPOSE";
    case Question::kWhatDoesItConnectTo: return "CONNECTIONS";
    case Question::kHowDoIPerform: break;
  }
  std::string out(action.empty() ? "use" : action);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace hyperdoc
