#include "hyperdoc/export.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hyperdoc/error.h"

namespace hyperdoc {
namespace {

std::string safe(const std::string& s) {
  std::string out;
  for (char c : s) {
    out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c : '_';
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Page {
  std::string name;
  std::string model;
  Id component;
  Response response;
};

std::string render_span(const AnnotatedSpan& s, const std::string& model, const std::set<std::string>& pages) {
  const std::string text = escape(s.text);
  std::string href;
  const char* cls = "";
  if (s.annotation.kind == Annotation::Kind::kEntity) {
    href = page_name(Question::kWhatIsIt, s.annotation.target, model);
    cls = "entity";
  } else if (s.annotation.kind == Annotation::Kind::kAction) {
    href = page_name(Question::kHowDoIPerform, s.annotation.target, model, s.annotation.action);
    cls = "action";
  } else {
    return text;
  }
  if (!pages.contains(href)) return "<span class=\"" + std::string(cls) + "\">" + text + "</span>";
  return "<a class=\"" + std::string(cls) + "\" href=\"" + href + "\">" + text + "</a>";
}

std::string render_body(const std::vector<AnnotatedSpan>& body, const std::string& model,
                        const std::set<std::string>& pages) {
  std::ostringstream os;
  bool in_list = false;
  for (size_t i = 0; i < body.size();) {
    size_t j = i + 1;
    while (j < body.size() && body[j].formatting.bullet_index == body[i].formatting.bullet_index) ++j;
    const bool bullet = body[i].formatting.bullet_index.has_value();
    if (bullet && !in_list) os << "<ul>\n";
    if (!bullet && in_list) os << "</ul>\n";
    in_list = bullet;
    os << (bullet ? "<li>" : "<p>");
    for (size_t k = i; k < j; ++k) os << render_span(body[k], model, pages);
    os << (bullet ? "</li>\n" : "</p>\n");
    i = j;
  }
  if (in_list) os << "</ul>\n";
  return os.str();
}

std::string document(const std::string& title, const std::string& content) {
  return "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" + escape(title) +
         "</title>\n</head>\n<body>\n" + content + "</body>\n</html>\n";
}

}  // namespace

std::string page_name(Question question, const Id& component, const std::string& model,
                      const std::string& action) {
  std::string q(to_string(question));
  if (question == Question::kHowDoIPerform && !action.empty()) q += "-" + safe(action);
  return "q_" + q + "__c_" + safe(component) + "__m_" + safe(model) + ".html";
}

std::vector<std::string> procedure_actions(const KnowledgeBase& kb, const Id& component) {
  std::set<std::string> out;
  for (const Id& node : kb.ancestors_by_specificity(component)) {
    for (const auto& [symbol, id] : kb.node(node).actions) out.insert(symbol);
  }
  return {out.begin(), out.end()};
}

Id root_task(const KnowledgeBase& kb) {
  for (const Frame& f : kb.nodes()) {
    if (f.kind == NodeKind::kTask && f.isa.empty()) return f.id;
  }
  throw Error(ErrorCode::kConfiguration, "", "the knowledge base has no task taxonomy");
}

std::map<std::string, std::string> render_site(const Engine& engine, const std::vector<std::string>& models,
                                               const Id& task) {
  const KnowledgeBase& kb = engine.bundle().kb;
  std::vector<Page> pages;
  for (const std::string& model : models) {
    engine.check_model(model, task);
    for (const Id& c : kb.components()) {
      auto add = [&](Question q, const std::string& action) {
        QuestionPoint point{q, c, task, model, {}, action};
        try {
          pages.push_back({page_name(q, c, model, action), model, c, engine.answer(point)});
        } catch (const Error& e) {
          if (!is_knowledge_absence(e.code())) throw;
        }
      };
      for (Question q : kAllQuestions) {
        if (q != Question::kHowDoIPerform) add(q, "");
      }
      for (const std::string& action : procedure_actions(kb, c)) add(Question::kHowDoIPerform, action);
    }
  }
  std::set<std::string> names;
  for (const Page& p : pages) names.insert(p.name);

  std::map<std::string, std::string> out;
  std::ostringstream index;
  index << "<h1>Contents</h1>\n";
  std::string current_model;
  for (const Page& p : pages) {
    if (p.model != current_model) {
      if (!current_model.empty()) index << "</ul>\n";
      index << "<h2>" << escape(p.model) << "</h2>\n<ul>\n";
      current_model = p.model;
    }
    index << "<li><a href=\"" << p.name << "\">" << escape(p.response.title) << "</a></li>\n";

    std::ostringstream body;
    body << "<nav>\n<a href=\"index.html\">Contents</a>\n";
    for (const Page& other : pages) {
      if (other.model == p.model && other.component == p.component && other.name != p.name) {
        body << "<a href=\"" << other.name << "\">" << escape(other.response.title) << "</a>\n";
      }
    }
    body << "</nav>\n<h1>" << escape(p.response.title) << "</h1>\n";
    body << render_body(p.response.body, p.model, names);
    std::ostringstream buttons;
    for (const FollowupButton& f : p.response.followups) {
      const std::string href = page_name(f.question, f.component, p.model, f.action);
      if (names.contains(href)) buttons << "<a class=\"followup\" href=\"" << href << "\">" << escape(f.label) << "</a>\n";
    }
    if (!buttons.str().empty()) body << "<div class=\"followups\">\n" << buttons.str() << "</div>\n";
    out[p.name] = document(p.response.title, body.str());
  }
  if (!current_model.empty()) index << "</ul>\n";
  out["index.html"] = document("Contents", index.str());
  return out;
}

std::vector<std::string> export_site(const Engine& engine, const std::vector<std::string>& models,
                                     const Id& task, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, dir.string(), "cannot create '" + dir.string() + "': " + ec.message());
  std::vector<std::string> names;
  for (const auto& [name, html] : render_site(engine, models, task)) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f || !(f << html)) throw Error(ErrorCode::kIo, name, "cannot write '" + (dir / name).string() + "'");
    names.push_back(name);
  }
  return names;
}

}  // namespace hyperdoc
