#include "hyperdoc/service.h"

#include <regex>

#include "httplib.h"
#include "hyperdoc/error.h"
#include "hyperdoc/realizer.h"
#include "hyperdoc/wire.h"

namespace hyperdoc {

struct Service::Server {
  httplib::Server http;
};

namespace {

using json = nlohmann::json;

Service::Reply error_reply(int status, const std::string& code, const std::string& message) {
  return {status, json{{"error", code}, {"message", message}}.dump(), "application/json"};
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLookup: return 404;
    case ErrorCode::kKnowledgeAbsent:
    case ErrorCode::kNoProcedure: return 422;
    case ErrorCode::kUsage:
    case ErrorCode::kParse: return 400;
    default: return 500;
  }
}

std::string field(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) throw Error(ErrorCode::kUsage, key, std::string("missing field '") + key + "'");
    return "";
  }
  if (!j[key].is_string()) throw Error(ErrorCode::kUsage, key, std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

json parse_body(const std::string& body) {
  json j = json::parse(body.empty() ? "{}" : body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw Error(ErrorCode::kUsage, "", "request body must be a JSON object");
  return j;
}

}  // namespace

Service::Service(std::shared_ptr<const Engine> engine)
    : engine_(std::move(engine)), server_(std::make_unique<Server>()) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    Reply r = handle(req.method, req.path, req.body);
    res.status = r.status;
    if (r.status != 204) res.set_content(r.body, r.content_type);
  };
  server_->http.Get(".*", route);
  server_->http.Post(".*", route);
  server_->http.Put(".*", route);
}

Service::~Service() = default;

std::shared_ptr<Service::Entry> Service::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::kLookup, id, "unknown session '" + id + "'");
  return it->second;
}

Service::Reply Service::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex model_path("^/sessions/([^/]+)/model$");
  static const std::regex query_path("^/sessions/([^/]+)/query$");
  try {
    std::smatch m;
    if (path == "/sessions") {
      if (method != "POST") return error_reply(405, "method", "use POST");
      json j = parse_body(body);
      Session s;
      s.expertise = field(j, "expertise", true);
      s.task = field(j, "task", true);
      std::string lang = field(j, "language", false);
      engine_->check_model(s.expertise, s.task);
      s.language = engine_->bundle().find_model(s.expertise)->language;
      if (!lang.empty() && lang != s.language) {
        return error_reply(400, "language", "model '" + s.expertise + "' writes '" + s.language + "', not '" + lang + "'");
      }
      auto entry = std::make_shared<Entry>();
      {
        std::lock_guard lock(mu_);
        s.id = "s" + std::to_string(next_id_++);
        entry->session = std::move(s);
        sessions_[entry->session.id] = entry;
      }
      return {201, json{{"session_id", entry->session.id}}.dump()};
    }
    if (std::regex_match(path, m, model_path)) {
      if (method != "PUT") return error_reply(405, "method", "use PUT");
      auto entry = find(m[1]);
      json j = parse_body(body);
      std::lock_guard lock(entry->mu);
      std::string expertise = field(j, "expertise", false);
      std::string task = field(j, "task", false);
      if (expertise.empty()) expertise = entry->session.expertise;
      if (task.empty()) task = entry->session.task;
      engine_->check_model(expertise, task);
      entry->session.expertise = expertise;
      entry->session.task = task;
      return {204, "", "application/json"};
    }
    if (std::regex_match(path, m, query_path)) {
      if (method != "POST") return error_reply(405, "method", "use POST");
      auto entry = find(m[1]);
      json j = parse_body(body);
      const std::string q = field(j, "question", true);
      auto question = parse_question(q);
      if (!question) return error_reply(400, "question", "unknown question '" + q + "'");
      const std::string component = field(j, "component", true);
      const std::string action = field(j, "action", false);
      std::lock_guard lock(entry->mu);
      Response r = engine_->ask(entry->session, *question, component, action);
      return {200, response_to_json(r).dump()};
    }
    if (path == "/kb/components") {
      if (method != "GET") return error_reply(405, "method", "use GET");
      const KnowledgeBase& kb = engine_->bundle().kb;
      json out = json::array();
      for (const Id& c : kb.components()) {
        json item = {{"id", c}};
        if (auto parent = kb.part_of(c)) item["part_of"] = *parent;
        item["parts"] = kb.parts_of(c);
        out.push_back(std::move(item));
      }
      return {200, out.dump()};
    }
    if (path == "/kb/questions") {
      if (method != "GET") return error_reply(405, "method", "use GET");
      json out = json::array();
      for (Question q : kAllQuestions) {
        out.push_back({{"question", std::string(to_string(q))}, {"label", followup_label(q, "")}});
      }
      return {200, out.dump()};
    }
    return error_reply(404, "not-found", "no route for " + method + " " + path);
  } catch (const Error& e) {
    return error_reply(status_for(e.code()), std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "internal", e.what());
  }
}

int Service::bind(const std::string& host, int port) {
  if (port == 0) return server_->http.bind_to_any_port(host);
  return server_->http.bind_to_port(host, port) ? port : -1;
}

bool Service::listen() { return server_->http.listen_after_bind(); }

void Service::wait_until_ready() const { server_->http.wait_until_ready(); }

void Service::stop() { server_->http.stop(); }

}  // namespace hyperdoc
