#ifndef HYPERDOC_EXPORT_H_
#define HYPERDOC_EXPORT_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hyperdoc/delivery.h"

namespace hyperdoc {

// q_<question>__c_<component>__m_<model>.html; procedures use
// q_HowDoIPerform-<action>__c_<component>__m_<model>.html.
std::string page_name(Question question, const Id& component, const std::string& model,
                      const std::string& action = "");

// Action symbols with a procedure for `component`, own and inherited, sorted.
std::vector<std::string> procedure_actions(const KnowledgeBase& kb, const Id& component);

// Every answerable page for the models under one task, plus index.html,
// keyed by file name. Deterministic: equal inputs give equal bytes.
std::map<std::string, std::string> render_site(const Engine& engine, const std::vector<std::string>& models,
                                               const Id& task);

// Writes render_site() into `dir`; returns the file names.
std::vector<std::string> export_site(const Engine& engine, const std::vector<std::string>& models,
                                     const Id& task, const std::filesystem::path& dir);

// Root of the task taxonomy.
Id root_task(const KnowledgeBase& kb);

}  // namespace hyperdoc

#endif  // HYPERDOC_EXPORT_H_
