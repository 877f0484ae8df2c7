// hyperdoc command line: gen, serve, export, check, validate.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperdoc/bundle.h"
#include "hyperdoc/delivery.h"
#include "hyperdoc/error.h"
#include "hyperdoc/export.h"
#include "hyperdoc/service.h"
#include "hyperdoc/standards.h"
#include "hyperdoc/wire.h"

namespace {

using namespace hyperdoc;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::shared_ptr<const Bundle> load(const std::string& dir) {
  LoadResult r = load_bundle_dir(dir);
  for (const Diagnostic& d : r.diagnostics) std::cerr << to_string(d) << "\n";
  if (!r.ok()) throw Error(ErrorCode::kStructure, dir, "bundle '" + dir + "' is invalid");
  return r.bundle;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Service* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypertext documentation generator"};
  app.require_subcommand(1);
  std::string kb;

  auto* gen = app.add_subcommand("gen", "Answer one question");
  std::string question, component, task, model, focus, action;
  bool as_json = false, trace = false;
  gen->add_option("--kb", kb, "Bundle directory")->required();
  gen->add_option("--question", question, "WhatIsIt, WhereIsIt, ...")->required();
  gen->add_option("--component", component, "Component id")->required();
  gen->add_option("--task", task, "Task id")->required();
  gen->add_option("--model", model, "Expertise model id")->required();
  gen->add_option("--focus", focus, "Comma-separated focus, most salient first");
  gen->add_option("--action", action, "Action for HowDoIPerform");
  gen->add_flag("--json", as_json, "Print the wire JSON");
  gen->add_flag("--trace", trace, "Print the content plan and sentence plans");

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--kb", kb, "Bundle directory")->required();
  serve->add_option("--port", port, "Port");
  serve->add_option("--host", host, "Address to bind");

  auto* exp = app.add_subcommand("export", "Write a static HTML site");
  std::string out_dir, models;
  exp->add_option("--kb", kb, "Bundle directory")->required();
  exp->add_option("--out", out_dir, "Output directory")->required();
  exp->add_option("--models", models, "Comma-separated model ids")->required();
  exp->add_option("--task", task, "Task id (default: root task)");

  auto* check = app.add_subcommand("check", "Check text against a writing standard");
  std::string profile = "default", file;
  check->add_option("--kb", kb, "Bundle directory")->required();
  check->add_option("--profile", profile, "Profile id");
  check->add_option("--file", file, "Text file (default: stdin)");

  auto* validate = app.add_subcommand("validate", "Validate a bundle");
  validate->add_option("--kb", kb, "Bundle directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) {
      LoadResult r = load_bundle_dir(kb);
      for (const Diagnostic& d : r.diagnostics) std::cout << to_string(d) << "\n";
      if (!r.ok()) return kFailed;
      std::cout << "ok\n";
      return kOk;
    }

    auto bundle = load(kb);

    if (*gen) {
      auto q = parse_question(question);
      if (!q) {
        std::cerr << "unknown question '" << question << "'\n";
        return kUsage;
      }
      auto engine = Engine(bundle);
      QuestionPoint point{*q, component, task, model, split_list(focus), action};
      Response r = engine.answer(point);
      if (as_json) {
        std::cout << response_to_json(r).dump(2) << "\n";
      } else {
        std::cout << r.title << "\n\n" << plain_text(r.body) << "\n";
        if (!r.followups.empty()) {
          std::cout << "\n";
          for (size_t i = 0; i < r.followups.size(); ++i) std::cout << (i ? " " : "") << "[" << r.followups[i].label << "]";
          std::cout << "\n";
        }
      }
      if (trace) std::cerr << format_trace(r, *bundle);
      return kOk;
    }

    if (*serve) {
      Service service(std::make_shared<Engine>(bundle));
      const int bound = service.bind(host, port);
      if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return kFailed;
      }
      g_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "listening on " << host << ":" << bound << "\n";
      service.listen();
      g_service = nullptr;
      return kOk;
    }

    if (*exp) {
      Engine engine(bundle);
      if (task.empty()) task = root_task(bundle->kb);
      auto names = export_site(engine, split_list(models), task, out_dir);
      std::cout << names.size() << " pages written to " << out_dir << "\n";
      return kOk;
    }

    if (*check) {
      const StandardProfile* prof = bundle->find_profile(profile);
      if (!prof) {
        std::cerr << "unknown profile '" << profile << "'\n";
        return kUsage;
      }
      std::stringstream text;
      if (file.empty()) {
        text << std::cin.rdbuf();
      } else {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
          std::cerr << "cannot read '" << file << "'\n";
          return kFailed;
        }
        text << in.rdbuf();
      }
      auto violations = check_text(spans_from_text(text.str()), *prof, &bundle->lexicon);
      bool errors = false;
      for (const Violation& v : violations) {
        std::cout << to_string(v) << "\n";
        errors |= v.severity == Violation::Severity::kError;
      }
      if (violations.empty()) std::cout << "ok\n";
      return errors ? kFailed : kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "] " << e.what() << "\n";
    return e.code() == ErrorCode::kUsage ? kUsage : kFailed;
  }
  return kOk;
}
