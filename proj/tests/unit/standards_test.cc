#include <gtest/gtest.h>

#include "hyperdoc/delivery.h"
#include "hyperdoc/error.h"
#include "hyperdoc/standards.h"
#include "support/random_bundle.h"

namespace hyperdoc {
namespace {

std::vector<Violation> errors_only(const std::vector<Violation>& vs) {
  std::vector<Violation> out;
  for (const Violation& v : vs) {
    if (v.severity == Violation::Severity::kError) out.push_back(v);
  }
  return out;
}

std::string describe(const std::vector<Violation>& vs) {
  std::string s;
  for (const Violation& v : vs) s += to_string(v) + "\n";
  return s;
}

std::string words(int n) {
  std::string s = "Remove";
  for (int i = 1; i < n; ++i) s += " the";
  return s + ".";
}

TEST(Standards, SentenceLengthLimit) {
  const StandardProfile profile;
  EXPECT_TRUE(check_text(spans_from_text(words(20)), profile).empty());
  const auto vs = check_text(spans_from_text("Lock it. " + words(23)), profile);
  ASSERT_EQ(vs.size(), 1u) << describe(vs);
  EXPECT_EQ(vs[0].rule, "max-sentence-words");
  EXPECT_EQ(vs[0].sentence, 1);
  EXPECT_EQ(vs[0].severity, Violation::Severity::kError);
}

TEST(Standards, InjectedLongSentenceIsFlaggedInARealAnswer) {
  const auto ate = testing::load_shipped("ate");
  const Engine engine(ate);
  Response r = engine.answer({Question::kWhatIsIt, "Llever-test-head12", "Task", "Skilled", {}, ""});
  ASSERT_TRUE(errors_only(check_text(r.body, *ate->find_profile("default"), &ate->lexicon)).empty());
  std::vector<AnnotatedSpan> body = r.body;
  AnnotatedSpan injected;
  injected.text = " " + words(23);
  injected.provenance = Provenance::kGenerated;
  body.push_back(injected);
  const auto vs = check_text(body, *ate->find_profile("default"), &ate->lexicon);
  bool flagged = false;
  for (const Violation& v : vs) flagged |= v.rule == "max-sentence-words" && v.sentence == 1;
  EXPECT_TRUE(flagged) << describe(vs);
}

TEST(Standards, CannedOverrunsAreAdvisory) {
  AnnotatedSpan s;
  s.text = words(25);
  s.provenance = Provenance::kCanned;
  const auto vs = check_text({s}, StandardProfile{});
  ASSERT_FALSE(vs.empty());
  EXPECT_TRUE(errors_only(vs).empty()) << describe(vs);
}

TEST(Standards, HeuristicsOnExternalText) {
  const StandardProfile profile;
  auto rules = [&](const std::string& text) {
    std::set<std::string> out;
    for (const Violation& v : check_text(spans_from_text(text), profile)) out.insert(v.rule);
    return out;
  };
  EXPECT_TRUE(rules("Remove the board.").empty());
  EXPECT_TRUE(rules("Keep removing the board.").contains(kGerundForm));
  EXPECT_TRUE(rules("The board has been removed.").contains(kComplexTense));
  EXPECT_TRUE(rules("The board is removed by the user.").contains(kPassivePattern));
}

TEST(Standards, HeuristicsOffWhenFeatureAllowed) {
  StandardProfile profile;
  profile.banned_features.clear();
  EXPECT_TRUE(check_text(spans_from_text("Keep removing the board."), profile).empty());
}

TEST(Standards, BannedAndUnapprovedLexemes) {
  StandardProfile profile;
  profile.approve_all_in_pack = false;
  profile.approved_lexemes = {"lever"};
  profile.banned_lexemes = {"tray"};
  AnnotatedSpan lever;
  lever.text = "lever";
  lever.lexeme = "lever";
  AnnotatedSpan tray = lever;
  tray.text = "tray";
  tray.lexeme = "tray";
  AnnotatedSpan board = lever;
  board.text = "board";
  board.lexeme = "board";
  std::set<std::string> found;
  for (const Violation& v : check_text({lever, tray, board}, profile)) found.insert(v.rule + ":" + v.token);
  EXPECT_EQ(found, (std::set<std::string>{"banned-word:tray", "unapproved-word:board"}));
}

TEST(Standards, ExternalVocabularyAgainstLexicon) {
  const auto ate = testing::load_shipped("ate");
  const StandardProfile& profile = *ate->find_profile("default");
  EXPECT_TRUE(check_text(spans_from_text("Raise the lever."), profile, &ate->lexicon).empty());
  const auto vs = check_text(spans_from_text("Raise the zorblax."), profile, &ate->lexicon);
  ASSERT_EQ(vs.size(), 1u) << describe(vs);
  EXPECT_EQ(vs[0].rule, "unapproved-word");
  EXPECT_EQ(vs[0].token, "zorblax");
}

TEST(Standards, BulletsEndSentences) {
  const auto vs = check_text(spans_from_text("It has these parts:\n- " + words(12) + "\n- " + words(12)), StandardProfile{});
  EXPECT_TRUE(vs.empty()) << describe(vs);
}

// Every generated answer on both shipped bundles meets the default standard.
TEST(Standards, GeneratedAnswersHaveNoErrors) {
  int answers = 0;
  for (const char* name : {"ate", "bicycle"}) {
    const auto bundle = testing::load_shipped(name);
    const Engine engine(bundle);
    std::vector<Id> tasks;
    for (const Frame& f : bundle->kb.nodes()) {
      if (f.kind == NodeKind::kTask) tasks.push_back(f.id);
    }
    for (const ExpertiseModel& model : bundle->models) {
      for (const Id& task : tasks) {
        for (const Id& component : bundle->kb.components()) {
          for (Question q : kAllQuestions) {
            try {
              const Response r = engine.answer({q, component, task, model.id, {}, ""});
              EXPECT_TRUE(errors_only(r.violations).empty())
                  << name << " " << component << " " << to_string(q) << "\n"
                  << plain_text(r.body) << "\n" << describe(r.violations);
              ++answers;
            } catch (const Error& e) {
              ASSERT_TRUE(is_knowledge_absence(e.code())) << e.what();
            }
          }
        }
      }
    }
  }
  EXPECT_GT(answers, 500);
}

}  // namespace
}  // namespace hyperdoc
