#include "support/random_bundle.h"

#include <algorithm>
#include <set>

#include "hyperdoc/error.h"
#include "support/oracles.h"

namespace hyperdoc::testing {
namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string letters(int k) {
  std::string s;
  do {
    s += static_cast<char>('a' + k % 26);
    k /= 26;
  } while (k > 0);
  return s;
}

void random_slots(std::mt19937& rng, Frame& f, double p) {
  for (const std::string& attr : random_attributes()) {
    if (!coin(rng, p)) continue;
    const auto& values = random_values(attr);
    f.slots.push_back({attr, SlotValue::symbol(values[static_cast<size_t>(pick(rng, 0, static_cast<int>(values.size()) - 1))])});
  }
}

LexicalEntry lexeme(std::string id, PartOfSpeech pos, std::string base, std::string denotes) {
  LexicalEntry e;
  e.id = std::move(id);
  e.part_of_speech = pos;
  e.base_form = std::move(base);
  e.denotes = std::move(denotes);
  return e;
}

}  // namespace

std::vector<Frame> random_frames(std::mt19937& rng, const RandomBundleOptions& o) {
  std::vector<Frame> frames;
  for (int k = 0; k < o.concepts; ++k) {
    Frame f;
    f.id = "C" + std::to_string(k);
    f.lexical_anchor = "n-c" + std::to_string(k);
    if (k > 0) {
      const int parents = o.multiple_parents && k > 2 && coin(rng, 0.35) ? 2 : 1;
      std::set<int> chosen;
      while (static_cast<int>(chosen.size()) < parents) chosen.insert(pick(rng, 0, k - 1));
      for (int p : chosen) f.isa.push_back("C" + std::to_string(p));
      random_slots(rng, f, 0.35);
    }
    frames.push_back(std::move(f));
    if (o.resolve_conflicts) {
      // Concepts come in topological order, so fixing each one as it is added
      // leaves no ambiguity below it.
      for (const std::string& attr : random_attributes()) {
        if (oracle_inherit(frames, frames.back().id, attr).ambiguous) {
          frames.back().slots.push_back({attr, SlotValue::symbol(random_values(attr).front())});
        }
      }
    }
  }
  std::vector<Id> ids;
  for (int k = 0; k < o.instances; ++k) {
    Frame f;
    f.id = "I" + std::to_string(k);
    f.kind = NodeKind::kInstance;
    f.isa.push_back("C" + std::to_string(pick(rng, o.concepts > 1 ? 1 : 0, o.concepts - 1)));
    random_slots(rng, f, 0.5);
    frames.push_back(std::move(f));
    ids.push_back("I" + std::to_string(k));
  }
  // Part-Of forest rooted at I0.
  for (int k = 1; k < o.instances; ++k) {
    const int parent = pick(rng, 0, k - 1);
    frames[static_cast<size_t>(o.concepts + parent)].parts.push_back(ids[static_cast<size_t>(k)]);
  }
  return frames;
}

Bundle random_bundle(std::mt19937& rng, const RandomBundleOptions& o) {
  std::vector<Frame> frames = random_frames(rng, o);
  std::vector<ActionRep> actions;

  Frame task_root;
  task_root.id = "T0";
  task_root.kind = NodeKind::kTask;
  task_root.slots.push_back({"action", SlotValue::symbol("use")});
  Frame task;
  task.id = "T1";
  task.kind = NodeKind::kTask;
  task.isa = {"T0"};
  frames.push_back(task_root);
  frames.push_back(task);

  std::vector<LexicalEntry> lex;
  for (int k = 0; k < o.concepts; ++k) {
    LexicalEntry e = lexeme("n-c" + std::to_string(k), PartOfSpeech::kNoun, "widget " + letters(k), "C" + std::to_string(k));
    e.basic_level = k > 0 && coin(rng, 0.2);
    lex.push_back(e);
    if (k > 0 && coin(rng, 0.2)) {
      LexicalEntry a = lexeme("a-c" + std::to_string(k), PartOfSpeech::kNoun, "W" + letters(k) + "X", "C" + std::to_string(k));
      a.abbreviation_of = e.id;
      lex.push_back(a);
    }
  }
  for (const std::string& attr : random_attributes()) {
    LexicalEntry n = lexeme("attr-" + attr, PartOfSpeech::kNoun, attr, attr);
    n.attribute_category = "description";
    lex.push_back(n);
    for (const std::string& v : random_values(attr)) lex.push_back(lexeme(v, PartOfSpeech::kAdjective, v, v));
  }
  LexicalEntry remove = lexeme("v-remove", PartOfSpeech::kVerb, "remove", "remove");
  remove.role_prepositions["source"] = "from";
  lex.push_back(remove);
  lex.push_back(lexeme("v-use", PartOfSpeech::kVerb, "use", "use"));

  if (o.with_actions && o.instances > 1) {
    const Id target = "I" + std::to_string(pick(rng, 1, o.instances - 1));
    ActionRep canned;
    canned.id = "A-canned";
    canned.kind = ActionKind::kCanned;
    canned.text = "Check the seals";
    ActionRep ekr;
    ekr.id = "A-ekr";
    ekr.kind = ActionKind::kEkr;
    ekr.segments = parse_ekr("Slide [@self] out of [" + target + "]");
    ActionRep tcf;
    tcf.id = "A-tcf";
    tcf.kind = ActionKind::kTcf;
    tcf.verb = "remove";
    tcf.roles = {{Role::kActee, {Filler::Kind::kSelf, ""}}, {Role::kSource, {Filler::Kind::kEntity, target}},
                 {Role::kManner, {Filler::Kind::kText, "slowly"}}};
    ActionRep proc;
    proc.id = "A-use";
    proc.kind = ActionKind::kCaseFrame;
    proc.verb = "use";
    proc.roles = {{Role::kActee, {Filler::Kind::kSelf, ""}}};
    proc.steps = {"A-canned", "A-ekr", "A-tcf"};
    actions = {canned, ekr, tcf, proc};
    frames[static_cast<size_t>(pick(rng, 1, std::max(1, o.concepts - 1)))].actions.emplace_back("use", "A-use");
  }

  Bundle b;
  b.kb = KnowledgeBase(std::move(frames), std::move(actions));
  b.lexicon = Lexicon(std::move(lex));
  PackSettings pack;
  pack.language = "en";
  pack.contractions = {{"it is", "it's"}};
  b.pack_settings.push_back(pack);
  int n = 0;
  for (Question q : kAllQuestions) {
    ContentRule r;
    r.id = "R" + std::to_string(n++);
    r.question = q;
    r.component_class = "C0";
    r.task_class = "T0";
    switch (q) {
      case Question::kWhatIsIt: r.schema = Schema::kIdentify; r.conveyed_attributes = {"colour", "size"}; break;
      case Question::kWhereIsIt: r.schema = Schema::kLocation; break;
      case Question::kWhatAreItsParts: r.schema = Schema::kPartsList; r.bullet = coin(rng, 0.5); break;
      case Question::kWhatAreItsSpecs: r.schema = Schema::kSpecs; r.conveyed_attributes = {"size"}; break;
      case Question::kWhatIsItsPurpose: r.schema = Schema::kPurpose; r.conveyed_attributes = {"location"}; break;
      case Question::kWhatDoesItConnectTo: r.schema = Schema::kConnections; r.conveyed_attributes = {"colour"}; break;
      case Question::kHowDoIPerform: r.schema = Schema::kProcedure; r.bullet = true; break;
    }
    r.candidate_followups = {Question::kWhatIsIt, Question::kWhereIsIt, Question::kHowDoIPerform};
    b.rules.push_back(r);
  }
  ExpertiseModel all;
  all.id = "All";
  all.knows_all_lexemes = true;
  all.knows_all_actions = true;
  ExpertiseModel some;
  some.id = "Some";
  some.known_lexemes.insert("n-c0");
  for (int k = 1; k < o.concepts; ++k) {
    if (coin(rng, 0.5)) some.known_lexemes.insert("n-c" + std::to_string(k));
  }
  some.style.contractions = true;
  some.style.allow_abbreviations = false;
  b.models = {all, some};
  b.profiles = {StandardProfile{}};
  return b;
}

std::shared_ptr<const Bundle> load_shipped(const std::string& name) {
  LoadResult r = load_bundle_dir(std::string(HYPERDOC_SOURCE_DIR) + "/kb/" + name);
  if (!r.ok()) {
    std::string msg;
    for (const Diagnostic& d : r.diagnostics) msg += to_string(d) + "\n";
    throw Error(ErrorCode::kStructure, name, "shipped bundle does not load:\n" + msg);
  }
  return r.bundle;
}

}  // namespace hyperdoc::testing
