#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

const std::string kRoot = HYPERDOC_SOURCE_DIR;
const std::string kCli = HYPERDOC_CLI;

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const auto out = std::filesystem::temp_directory_path() / "hyperdoc_cli_out.txt";
  const std::string cmd = kCli + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

const std::string kAte = "--kb " + kRoot + "/kb/ate";

TEST(Cli, GenPrintsAnswer) {
  const CliResult r = run("gen " + kAte + " --question WhatIsIt --component Llever-test-head12 --task Task --model Skilled");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("It is a black locking lever."), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[WHERE]"), std::string::npos) << r.out;
}

TEST(Cli, GenJson) {
  const CliResult r = run("gen " + kAte + " --question WhatIsIt --component Test-Head12 --task Operations --model Skilled --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"followups\""), std::string::npos);
}

TEST(Cli, KnowledgeAbsenceFails) {
  const CliResult r = run("gen " + kAte + " --question HowDoIPerform --component Llever-test-head12 --task Task --model Skilled --action polish");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("gen " + kAte).code, 2);
  EXPECT_EQ(run("gen " + kAte + " --question WhyIsIt --component ATE-1 --task Task --model Skilled").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run("validate " + kAte).code, 0);
  EXPECT_EQ(run("validate --kb " + kRoot + "/kb/bicycle").code, 0);
  EXPECT_EQ(run("validate --kb /nonexistent/bundle").code, 1);
}

TEST(Cli, Check) {
  const auto file = std::filesystem::temp_directory_path() / "hyperdoc_cli_check.txt";
  std::ofstream(file) << "Raise the lever.\n";
  EXPECT_EQ(run("check " + kAte + " --file " + file.string()).code, 0);
  std::ofstream(file) << "The lever has been raised by the user.\n";
  EXPECT_EQ(run("check " + kAte + " --file " + file.string()).code, 1);
  EXPECT_EQ(run("check " + kAte + " --profile nope --file " + file.string()).code, 2);
}

TEST(Cli, Export) {
  const auto dir = std::filesystem::temp_directory_path() / "hyperdoc_cli_export";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run("export " + kAte + " --models Skilled,Naive --out " + dir.string()).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "index.html"));
  EXPECT_TRUE(std::filesystem::exists(dir / "q_WhatIsIt__c_Llever-test-head12__m_Naive.html"));
  std::filesystem::remove_all(dir);
}

}  // namespace
