#ifndef HYPERDOC_SERVICE_H_
#define HYPERDOC_SERVICE_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "hyperdoc/delivery.h"

namespace hyperdoc {

// HTTP API over an Engine:
//   POST /sessions {expertise, task, language?} -> 201 {session_id}
//   PUT  /sessions/{id}/model {expertise?, task?} -> 204
//   POST /sessions/{id}/query {question, component, action?} -> 200 response
//   GET  /kb/components, GET /kb/questions
class Service {
 public:
  struct Reply {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
  };

  explicit Service(std::shared_ptr<const Engine> engine);
  ~Service();

  // Transport-independent request handling; safe to call concurrently.
  Reply handle(const std::string& method, const std::string& path, const std::string& body);

  // Binds the listening socket; port 0 picks a free port. Returns the bound
  // port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Serves on the bound socket until stop().
  bool listen();
  void wait_until_ready() const;
  void stop();

 private:
  struct Entry {
    std::mutex mu;
    Session session;
  };

  std::shared_ptr<Entry> find(const std::string& id);

  std::shared_ptr<const Engine> engine_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_id_ = 1;
  struct Server;
  std::unique_ptr<Server> server_;
};

}  // namespace hyperdoc

#endif  // HYPERDOC_SERVICE_H_
