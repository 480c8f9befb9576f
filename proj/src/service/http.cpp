#include "missing_why/service/http.hpp"

#include <httplib.h>

#include <map>
#include <mutex>

#include "missing_why/error.hpp"
#include "missing_why/service/service.hpp"
#include "missing_why/syntax.hpp"

namespace missing_why::service {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kDefaultLabels = 3;

struct Entry {
  explicit Entry(Session s) : session(std::move(s)) {}
  std::mutex mutex;  // serializes requests on the session
  Session session;
  std::mutex cancel_mutex;
  CancelToken running;
};

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSession: return 404;
    case ErrorCode::Cancelled: return 409;
    case ErrorCode::Internal: return 500;
    default: return 400;
  }
}

json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON body: ") + e.what());
  }
}

int int_field(const json& body, const char* key, int fallback) {
  if (!body.contains(key)) return fallback;
  if (!body[key].is_number_integer()) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be an integer");
  return body[key].get<int>();
}

std::string string_field(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string())
    throw Error(ErrorCode::InvalidArgument, std::string("missing string field ") + key);
  return body[key].get<std::string>();
}

ordered_json pending_json(const Session& s) {
  ordered_json out;
  out["pending"] = ordered_json::array();
  for (const auto& a : s.pending_disjointnesses()) out["pending"].push_back(a.text());
  return out;
}

ordered_json state_json(const Session& s) {
  ordered_json out;
  out["id"] = s.id();
  out["epoch"] = s.epoch();
  out["ontology"] = s.ontology().serialize();
  out["missing"] = missing_to_json(s.missing())["missing"];
  out["pending"] = pending_json(s)["pending"];
  out["hasResult"] = s.last_result().has_value();
  return out;
}

}  // namespace

struct ApiServer::Impl {
  httplib::Server server;
  std::mutex store_mutex;
  std::map<std::string, std::shared_ptr<Entry>> sessions;
  std::uint64_t next_id = 1;

  std::shared_ptr<Entry> find(const std::string& id) {
    std::lock_guard lock(store_mutex);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw Error(ErrorCode::UnknownSession, "no session " + id);
    return it->second;
  }

  // Runs `fn` with the session locked and turns errors into JSON replies.
  template <typename Fn>
  void with_session(const httplib::Request& req, httplib::Response& res, Fn&& fn) {
    guarded(res, [&] {
      auto entry = find(req.matches[1]);
      std::lock_guard lock(entry->mutex);
      return fn(*entry, entry->session);
    });
  }

  template <typename Fn>
  static void guarded(httplib::Response& res, Fn&& fn) {
    try {
      ordered_json out = fn();
      res.set_content(out.dump(), "application/json");
    } catch (const SyntaxError& e) {
      ordered_json err;
      err["code"] = std::string(to_string(e.code()));
      err["message"] = e.what();
      err["line"] = e.line();
      err["column"] = e.column();
      res.status = 400;
      res.set_content(ordered_json{{"error", err}}.dump(), "application/json");
    } catch (const Error& e) {
      ordered_json err;
      err["code"] = std::string(to_string(e.code()));
      err["message"] = e.what();
      res.status = status_for(e.code());
      res.set_content(ordered_json{{"error", err}}.dump(), "application/json");
    } catch (const std::exception& e) {
      ordered_json err;
      err["code"] = "Internal";
      err["message"] = e.what();
      res.status = 500;
      res.set_content(ordered_json{{"error", err}}.dump(), "application/json");
    }
  }

  // Fresh cancel token for a long computation on `entry`.
  static CancelToken start(Entry& entry) {
    std::lock_guard lock(entry.cancel_mutex);
    entry.running = CancelToken{};
    return entry.running;
  }

  void routes() {
    server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const json body = body_of(req);
        const std::string text = body.contains("ontology") ? string_field(body, "ontology") : "";
        Ontology ontology = parse_ontology(text);
        std::lock_guard lock(store_mutex);
        const std::string id = "s" + std::to_string(next_id++);
        auto entry = std::make_shared<Entry>(Session(id, std::move(ontology)));
        sessions.emplace(id, entry);
        res.status = 201;
        return state_json(entry->session);
      });
    });

    server.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [](Entry&, Session& s) { return state_json(s); });
    });

    server.Put(R"(/sessions/([^/]+)/query)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry&, Session& s) {
        const json body = body_of(req);
        auto missing = missing_from_json(body);
        std::optional<Signature> permitted;
        if (body.contains("permitted") && !body["permitted"].is_null()) permitted = signature_from_json(body);
        s.set_query(std::move(missing), std::move(permitted));
        return state_json(s);
      });
    });

    server.Post(R"(/sessions/([^/]+)/fixpoints)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry&, Session& s) {
        auto blocks = parse_axiom_blocks(string_field(body_of(req), "text"));
        ordered_json out;
        out["disjuncts"] = blocks.size();
        s.attach_fixpoints(std::move(blocks));
        return out;
      });
    });

    server.Get(R"(/sessions/([^/]+)/support)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry&, Session& s) {
        const auto support = s.check_support(parse_method(req.get_param_value("method")));
        ordered_json out;
        out["supported"] = support.supported;
        out["message"] = support.message;
        return out;
      });
    });

    server.Post(R"(/sessions/([^/]+)/explain)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry& entry, Session& s) {
        const json body = body_of(req);
        const Method method = parse_method(string_field(body, "method"));
        const auto& result = s.generate(method, int_field(body, "pageSize", 5), start(entry));
        return to_json(result, int_field(body, "k", kDefaultLabels), s.permitted());
      });
    });

    server.Post(R"(/sessions/([^/]+)/recompute)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry& entry, Session& s) {
        const json body = body_of(req);
        const Method method = parse_method(string_field(body, "method"));
        const auto& result = s.recompute(method, start(entry));
        return to_json(result, int_field(body, "k", kDefaultLabels), s.permitted());
      });
    });

    server.Post(R"(/sessions/([^/]+)/disjointnesses)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry&, Session& s) {
        const json body = body_of(req);
        if (!body.contains("names") || !body["names"].is_array())
          throw Error(ErrorCode::InvalidArgument, "expected {\"names\": [...]}");
        std::vector<std::string> names;
        for (const auto& n : body["names"]) {
          if (!n.is_string()) throw Error(ErrorCode::InvalidArgument, "names must be strings");
          names.push_back(n.get<std::string>());
        }
        s.add_disjointness(names);
        return pending_json(s);
      });
    });

    server.Delete(R"(/sessions/([^/]+)/disjointnesses/(\d+))",
                  [this](const httplib::Request& req, httplib::Response& res) {
                    with_session(req, res, [&](Entry&, Session& s) {
                      s.remove_disjointness(std::stoul(req.matches[2]));
                      return pending_json(s);
                    });
                  });

    server.Post(R"(/sessions/([^/]+)/apply)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry&, Session& s) {
        const json body = body_of(req);
        const std::string what = string_field(body, "what");
        if (what == "disjointnesses") {
          s.apply_disjointnesses();
        } else if (what == "hypothesis") {
          const int index = int_field(body, "index", -1);
          if (index < 0) throw Error(ErrorCode::IndexOutOfRange, "hypothesis index must be non-negative");
          s.apply_hypothesis(static_cast<std::size_t>(index));
        } else {
          throw Error(ErrorCode::InvalidArgument, "what must be disjointnesses or hypothesis");
        }
        return state_json(s);
      });
    });

    server.Post(R"(/sessions/([^/]+)/revert)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [](Entry&, Session& s) {
        s.revert();
        return state_json(s);
      });
    });

    server.Get(R"(/sessions/([^/]+)/graph)", [this](const httplib::Request& req, httplib::Response& res) {
      with_session(req, res, [&](Entry&, Session& s) {
        int k = kDefaultLabels;
        if (req.has_param("k")) {
          try {
            k = std::stoi(req.get_param_value("k"));
          } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "k must be an integer");
          }
        }
        if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
        const GraphDoc doc = s.graph(k);
        if (req.get_param_value("format") == "dot") {
          ordered_json out;
          out["dot"] = to_dot(doc);
          return out;
        }
        return to_json(doc);
      });
    });

    // No session lock: the point is to reach a computation holding it.
    server.Post(R"(/sessions/([^/]+)/cancel)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        auto entry = find(req.matches[1]);
        std::lock_guard lock(entry->cancel_mutex);
        entry->running.cancel();
        return ordered_json{{"cancelled", true}};
      });
    });
  }
};

ApiServer::ApiServer() : impl_(std::make_unique<Impl>()) { impl_->routes(); }
ApiServer::~ApiServer() = default;

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() { impl_->server.stop(); }

}  // namespace missing_why::service
