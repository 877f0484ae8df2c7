#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "bundle_schema.h"
#include "hyperdoc/bundle.h"
#include "json.hpp"
#include "support/random_bundle.h"

namespace hyperdoc {
namespace {

const std::string kRoot = HYPERDOC_SOURCE_DIR;

std::vector<Diagnostic> errors_of(const std::vector<Diagnostic>& ds) {
  std::vector<Diagnostic> out;
  for (const Diagnostic& d : ds) {
    if (d.severity == Diagnostic::Severity::kError) out.push_back(d);
  }
  return out;
}

std::string describe(const std::vector<Diagnostic>& ds) {
  std::string s;
  for (const Diagnostic& d : ds) s += to_string(d) + "\n";
  return s;
}

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

// ATE sources with `from` replaced by `to` in the file `path`.
std::vector<SourceFile> ate_with(const std::string& path, const std::string& from, const std::string& to) {
  std::vector<SourceFile> files = read_bundle_dir(kRoot + "/kb/ate");
  bool replaced = false;
  for (SourceFile& f : files) {
    if (f.path != path) continue;
    const size_t at = f.text.find(from);
    if (at == std::string::npos) continue;
    f.text.replace(at, from.size(), to);
    replaced = true;
  }
  EXPECT_TRUE(replaced) << from;
  return files;
}

std::vector<SourceFile> ate_plus(const std::string& path, const std::string& extra) {
  std::vector<SourceFile> files = read_bundle_dir(kRoot + "/kb/ate");
  for (SourceFile& f : files) {
    if (f.path == path) f.text += extra;
  }
  return files;
}

TEST(Bundle, ShippedBundlesLoadWithoutErrors) {
  for (const char* name : {"ate", "bicycle"}) {
    const LoadResult r = load_bundle_dir(kRoot + "/kb/" + name);
    EXPECT_TRUE(r.ok()) << name << "\n" << describe(r.diagnostics);
    EXPECT_TRUE(errors_of(r.diagnostics).empty());
  }
}

TEST(Bundle, ShippedBundlesHaveTheExpectedSize) {
  const auto ate = testing::load_shipped("ate");
  EXPECT_NE(ate->kb.find("Llever-test-head12"), nullptr);
  EXPECT_NE(ate->find_model("Skilled"), nullptr);
  EXPECT_NE(ate->find_model("Naive"), nullptr);
  const auto bike = testing::load_shipped("bicycle");
  EXPECT_GE(bike->kb.components().size(), 50u);
}

TEST(Bundle, DanglingPartGivesExactlyOneDiagnostic) {
  const LoadResult r = load_bundle(
      ate_with("instances/ate.kb", "parts: @ITA-Mechanism-4, @Llever-test-head12",
               "parts: @ITA-Mechanism-4, @Llever-test-head12, @Ghost-Part"));
  EXPECT_FALSE(r.ok());
  const std::vector<Diagnostic> errors = errors_of(r.diagnostics);
  ASSERT_EQ(errors.size(), 1u) << describe(r.diagnostics);
  const Diagnostic& d = errors.front();
  EXPECT_EQ(d.code, "dangling-reference");
  EXPECT_EQ(d.where.file, "instances/ate.kb");
  EXPECT_GT(d.where.line, 0);
  EXPECT_NE(d.message.find("Ghost-Part"), std::string::npos);
}

TEST(Bundle, PartOfCycleIsReported) {
  const LoadResult r = load_bundle(
      ate_with("instances/ate.kb", "parts: @ITA-Mechanism-4, @Llever-test-head12",
               "parts: @ITA-Mechanism-4, @Llever-test-head12, @ATE-1"));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics, "part-of-cycle")) << describe(r.diagnostics);
}

TEST(Bundle, IsaCycleIsReported) {
  const LoadResult r = load_bundle(ate_with("concepts/domain.kb", "concept Machine\n  isa: @Thing",
                                            "concept Machine\n  isa: @ATE"));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics, "isa-cycle")) << describe(r.diagnostics);
}

const char* kDiamond = R"(
concept Red-part
  isa: @Component
  lex: component
  slot colour: red

concept Blue-part
  isa: @Component
  lex: component
  slot colour: blue

concept Mixed-part
  isa: @Red-part, @Blue-part
  lex: component
)";

TEST(Bundle, DiamondConflictIsReportedAndResolvable) {
  const LoadResult bad = load_bundle(ate_plus("concepts/domain.kb", kDiamond));
  EXPECT_FALSE(bad.ok());
  EXPECT_TRUE(has_code(bad.diagnostics, "inheritance-ambiguity")) << describe(bad.diagnostics);

  const LoadResult fixed = load_bundle(ate_plus("concepts/domain.kb", std::string(kDiamond) + "  slot colour: red\n"));
  EXPECT_FALSE(has_code(fixed.diagnostics, "inheritance-ambiguity")) << describe(fixed.diagnostics);
  EXPECT_TRUE(fixed.ok()) << describe(fixed.diagnostics);
}

TEST(Bundle, ParseErrorsCarryFileAndLine) {
  const LoadResult r = load_bundle(ate_plus("concepts/domain.kb", "\nconcept Broken\n  no colon here\n"));
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(has_code(r.diagnostics, "parse")) << describe(r.diagnostics);
  for (const Diagnostic& d : r.diagnostics) {
    if (d.code != "parse") continue;
    EXPECT_EQ(d.where.file, "concepts/domain.kb");
    EXPECT_GT(d.where.line, 0);
  }
}

TEST(Bundle, UnknownModelKnowledgeIsReported) {
  const LoadResult r = load_bundle(ate_with("models/models.model", "knows: thing, machine", "knows: thing, no-such-word, machine"));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r.diagnostics, "dangling-reference")) << describe(r.diagnostics);
}

void expect_round_trip(const Bundle& original, const std::string& label) {
  const std::vector<SourceFile> files = serialize_bundle(original);
  const LoadResult again = load_bundle(files);
  ASSERT_TRUE(again.ok()) << label << "\n" << describe(again.diagnostics);
  EXPECT_TRUE(structurally_equal(original, *again.bundle)) << label;
  const std::vector<SourceFile> files2 = serialize_bundle(*again.bundle);
  ASSERT_EQ(files.size(), files2.size());
  for (size_t i = 0; i < files.size(); ++i) {
    EXPECT_EQ(files[i].path, files2[i].path);
    EXPECT_EQ(files[i].text, files2[i].text) << label << " " << files[i].path;
  }
}

TEST(Bundle, ShippedBundlesRoundTrip) {
  expect_round_trip(*testing::load_shipped("ate"), "ate");
  expect_round_trip(*testing::load_shipped("bicycle"), "bicycle");
}

TEST(Bundle, RandomBundlesAreValidAndRoundTrip) {
  for (int seed = 0; seed < 200; ++seed) {
    std::mt19937 rng(static_cast<unsigned>(seed));
    const Bundle b = testing::random_bundle(rng);
    const std::vector<Diagnostic> ds = errors_of(validate_bundle(b));
    ASSERT_TRUE(ds.empty()) << "seed " << seed << "\n" << describe(ds);
    expect_round_trip(b, "seed " + std::to_string(seed));
  }
}

TEST(Bundle, WriteDirThenLoadDir) {
  const auto ate = testing::load_shipped("ate");
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "hyperdoc_bundle_rt";
  std::filesystem::remove_all(dir);
  write_bundle_dir(*ate, dir);
  const LoadResult r = load_bundle_dir(dir);
  ASSERT_TRUE(r.ok()) << describe(r.diagnostics);
  EXPECT_TRUE(structurally_equal(*ate, *r.bundle));
  std::filesystem::remove_all(dir);
}

// The documented schema must list exactly the record kinds and keys the
// parser accepts.
TEST(Bundle, DocumentedSchemaMatchesParser) {
  std::ifstream in(kRoot + "/docs/bundle_schema.json");
  ASSERT_TRUE(in.good());
  const nlohmann::json doc = nlohmann::json::parse(in);
  const auto& records = schema::records();
  ASSERT_EQ(doc.at("records").size(), records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    const nlohmann::json& r = doc.at("records")[i];
    EXPECT_EQ(r.at("kind").get<std::string>(), records[i].kind);
    EXPECT_EQ(r.at("extension").get<std::string>(), records[i].extension);
    EXPECT_EQ(r.at("id_required").get<bool>(), records[i].id_required);
    ASSERT_EQ(r.at("keys").size(), records[i].keys.size()) << records[i].kind;
    for (size_t k = 0; k < records[i].keys.size(); ++k) {
      const nlohmann::json& key = r.at("keys")[k];
      EXPECT_EQ(key.at("key").get<std::string>(), records[i].keys[k].key);
      EXPECT_EQ(key.at("type").get<std::string>(), records[i].keys[k].value_type);
      EXPECT_EQ(key.at("qualified").get<bool>(), records[i].keys[k].qualified);
      EXPECT_EQ(key.at("repeatable").get<bool>(), records[i].keys[k].repeatable);
    }
  }
}

}  // namespace
}  // namespace hyperdoc
