/*
 * Copyright 2026 The zmpo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "serve.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <utility>

#include <httplib.h>

#include "commands.hpp"
#include "json_util.hpp"
#include "zmpo/error.hpp"
#include "zmpo/signal_io.hpp"
#include "zmpo/transform.hpp"

namespace zmpo::tools {
namespace {

// Request failures that map straight to an HTTP status.
class HttpError : public std::runtime_error {
 public:
  HttpError(int status, std::string type, const std::string& message)
      : std::runtime_error(message), status_(status), type_(std::move(type)) {}
  int status() const { return status_; }
  const std::string& type() const { return type_; }

 private:
  int status_;
  std::string type_;
};

ApiResponse error_response(int status, const std::string& type, const std::string& message) {
  return {status, {{"error", {{"status", status}, {"type", type}, {"message", message}}}}};
}

template <typename F>
ApiResponse guarded(F&& f) {
  try {
    return f();
  } catch (const HttpError& e) {
    return error_response(e.status(), e.type(), e.what());
  } catch (const RangeError& e) {
    return error_response(409, "range_error", e.what());
  } catch (const ResourceError& e) {
    return error_response(413, "resource_error", e.what());
  } catch (const json::exception& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::bad_alloc&) {
    return error_response(500, "numeric_error", "out of memory");
  } catch (const std::exception& e) {
    if (exit_code_for(e) == kExitParseError) {
      return error_response(400, "bad_request", e.what());
    }
    return error_response(500, "numeric_error", e.what());
  }
}

std::optional<std::uint64_t> query_uint(const QueryParams& q, const std::string& key) {
  auto it = q.find(key);
  if (it == q.end()) return std::nullopt;
  const std::string& s = it->second;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw HttpError(400, "bad_request", "query parameter '" + key +
                                            "' is not a non-negative integer: '" + s + "'");
  }
  return v;
}

std::string session_key(const std::string& signal, const TransformParams& p) {
  return signal + '|' + std::to_string(p.n) + '|' +
         std::to_string(std::bit_cast<std::uint64_t>(p.omega_r)) + '|' +
         std::to_string(std::bit_cast<std::uint64_t>(p.omega_i)) + '|' +
         std::to_string(std::bit_cast<std::uint64_t>(p.tau));
}

// FNV-1a, printed as 16 hex digits.
std::string session_id(const std::string& key) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void update_max(std::atomic<double>& slot, double v) {
  double cur = slot.load();
  while (v > cur && !slot.compare_exchange_weak(cur, v)) {
  }
}

}  // namespace

ApiResponse ApiService::create_session(const std::string& body) {
  return guarded([&]() -> ApiResponse {
    const json req = json::parse(body);
    if (!req.is_object()) throw HttpError(400, "bad_request", "body must be a JSON object");
    if (!req.contains("signal") || !req.contains("n")) {
      throw HttpError(400, "bad_request", "body needs \"signal\" and \"n\"");
    }
    const std::string signal = req.at("signal").get<std::string>();
    TransformParams p;
    p.n = req.at("n").get<std::size_t>();
    p.omega_r = req.value("wr", p.omega_r);
    p.omega_i = req.value("wi", p.omega_i);
    p.tau = req.value("tau", p.tau);
    p.validate();
    const std::string id = session_id(session_key(signal, p));

    std::lock_guard<std::mutex> create_lock(create_mutex_);
    {
      std::shared_lock<std::shared_mutex> lock(sessions_mutex_);
      auto it = sessions_.find(id);
      if (it != sessions_.end()) {
        json j = session_json(*it->second);
        j["created"] = false;
        return {200, j};
      }
    }
    check_memory(estimate_transform_bytes(p.n), "a session at n = " + std::to_string(p.n));
    const SignalVector x = load_signal(signal, p.n);
    TransformResult r = transform(x, p);
    auto session = std::make_shared<Session>(
        id, signal, p, GridEvaluator(std::move(r.output), p), bonds_json(r), r.validated);
    {
      std::unique_lock<std::shared_mutex> lock(sessions_mutex_);
      sessions_.emplace(id, session);
    }
    json j = session_json(*session);
    j["created"] = true;
    return {201, j};
  });
}

ApiResponse ApiService::scan(const QueryParams& query) const {
  return guarded([&]() -> ApiResponse {
    const std::shared_ptr<const Session> s = find(query);
    const std::uint64_t big_n = s->params.grid_size();
    GridWindow w;
    const std::uint64_t count =
        query_uint(query, "count").value_or(std::min<std::uint64_t>(256, big_n));
    if (count == 0 || count > 4096) {
      throw HttpError(400, "bad_request", "count must be in [1, 4096]");
    }
    w.count = static_cast<std::size_t>(count);
    w.stride = query_uint(query, "stride").value_or(std::max<std::uint64_t>(1, big_n / count));
    w.k0 = query_uint(query, "k0").value_or(0);
    w.l0 = query_uint(query, "l0").value_or(0);
    const GridScan scan = s->evaluator.scan(w);

    json abs_chi = json::array(), re_chi = json::array(), im_chi = json::array();
    for (const GridSample& g : scan.samples) {
      abs_chi.push_back(std::abs(g.chi));
      re_chi.push_back(g.chi.real());
      im_chi.push_back(g.chi.imag());
    }
    update_max(s->max_abs_seen, scan.max_abs());
    json corners = json::array();
    const std::size_t last = w.count - 1;
    for (auto [a, b] : {std::pair{std::size_t{0}, std::size_t{0}}, std::pair{std::size_t{0}, last},
                        std::pair{last, std::size_t{0}}, std::pair{last, last}}) {
      const GridSample& g = scan.at(a, b);
      corners.push_back({{"k", g.k}, {"l", g.l}, {"z", complex_json(g.z)}});
    }
    json j = window_json(w);
    j["session"] = s->id;
    j["abs_chi"] = std::move(abs_chi);
    j["re_chi"] = std::move(re_chi);
    j["im_chi"] = std::move(im_chi);
    j["z_corners"] = std::move(corners);
    return {200, j};
  });
}

ApiResponse ApiService::meta(const QueryParams& query) const {
  return guarded([&]() -> ApiResponse {
    const std::shared_ptr<const Session> s = find(query);
    json j = session_json(*s);
    j["max_abs_chi_seen"] = s->max_abs_seen.load();
    return {200, j};
  });
}

std::size_t ApiService::session_count() const {
  std::shared_lock<std::shared_mutex> lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<const ApiService::Session> ApiService::find(const QueryParams& query) const {
  auto it = query.find("session");
  if (it == query.end() || it->second.empty()) {
    throw HttpError(400, "bad_request", "missing query parameter 'session'");
  }
  std::shared_lock<std::shared_mutex> lock(sessions_mutex_);
  auto found = sessions_.find(it->second);
  if (found == sessions_.end()) {
    throw HttpError(404, "not_found", "unknown session '" + it->second + "'");
  }
  return found->second;
}

json ApiService::session_json(const Session& s) const {
  return {{"session", s.id},
          {"signal", s.signal},
          {"params", params_json(s.params)},
          {"validated", s.validated},
          {"bonds", s.bonds}};
}

void mount_api(httplib::Server& server, ApiService& api) {
  auto reply = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto params = [](const httplib::Request& req) {
    QueryParams q;
    for (const auto& [key, value] : req.params) q.emplace(key, value);
    return q;
  };
  server.Post("/session", [&api, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, api.create_session(req.body));
  });
  server.Get("/scan", [&api, reply, params](const httplib::Request& req,
                                            httplib::Response& res) {
    reply(res, api.scan(params(req)));
  });
  server.Get("/meta", [&api, reply, params](const httplib::Request& req,
                                            httplib::Response& res) {
    reply(res, api.meta(params(req)));
  });
  server.set_error_handler([reply](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    reply(res, error_response(res.status, res.status == 404 ? "not_found" : "http_error",
                              req.method + " " + req.path));
    return httplib::Server::HandlerResponse::Handled;
  });
}

void run_server(const ServeOptions& options, std::ostream& log) {
  ApiService api;
  httplib::Server server;
  mount_api(server, api);
  int port = options.port;
  if (port == 0) {
    port = server.bind_to_any_port(options.host);
  } else if (!server.bind_to_port(options.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw ResourceError("cannot bind " + options.host + ":" + std::to_string(options.port));
  }
  log << "listening on http://" << options.host << ':' << port << std::endl;
  server.listen_after_bind();
}

}  // namespace zmpo::tools
