#pragma once

// JSON-over-HTTP front end for explanation sessions.
//
//   POST   /sessions                        {"ontology": text}
//   GET    /sessions/{id}
//   PUT    /sessions/{id}/query             {"missing": [...], "permitted": {...}?}
//   POST   /sessions/{id}/fixpoints         {"text": blocks separated by ---}
//   GET    /sessions/{id}/support?method=
//   POST   /sessions/{id}/explain           {"method", "pageSize"?, "k"?}
//   POST   /sessions/{id}/disjointnesses    {"names": [...]}
//   DELETE /sessions/{id}/disjointnesses/{i}
//   POST   /sessions/{id}/recompute         {"method", "k"?}
//   POST   /sessions/{id}/apply             {"what": "disjointnesses"} | {"what": "hypothesis", "index"}
//   POST   /sessions/{id}/revert
//   GET    /sessions/{id}/graph?k=&format=json|dot
//   POST   /sessions/{id}/cancel
//
// Failures answer {"error": {"code", "message"}} with the ErrorCode name as
// code. Requests on one session are serialized; cancel bypasses the queue.

#include <memory>
#include <string>

namespace missing_why::service {

class ApiServer {
 public:
  ApiServer();
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace missing_why::service
