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


// HTTP JSON API over transform sessions.
//
//   POST /session  {"signal", "n", "wr", "wi", "tau"} -> session id + bonds
//   GET  /scan?session=&k0=&l0=&stride=&count=       -> |chi|, re, im arrays
//   GET  /meta?session=                                -> params, max |chi| seen
//
// Errors carry {"error": {"status", "type", "message"}} with status 400 for
// malformed requests, 404 for unknown sessions and 409 for windows outside
// the grid. Sessions are immutable after creation and live in memory.

#ifndef ZMPO_TOOLS_SERVE_HPP_
#define ZMPO_TOOLS_SERVE_HPP_

#include <atomic>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "zmpo/oracle.hpp"
#include "zmpo/scan.hpp"

namespace httplib {
class Server;
}

namespace zmpo::tools {

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

using QueryParams = std::map<std::string, std::string>;

// Transport-independent request handling; safe for concurrent calls.
class ApiService {
 public:
  // Identical requests map to the same session id and reuse the session.
  ApiResponse create_session(const std::string& body);
  ApiResponse scan(const QueryParams& query) const;
  ApiResponse meta(const QueryParams& query) const;

  std::size_t session_count() const;

 private:
  struct Session {
    Session(std::string id, std::string signal, const TransformParams& params,
            GridEvaluator evaluator, nlohmann::json bonds, bool validated)
        : id(std::move(id)),
          signal(std::move(signal)),
          params(params),
          evaluator(std::move(evaluator)),
          bonds(std::move(bonds)),
          validated(validated) {}

    std::string id;
    std::string signal;
    TransformParams params;
    GridEvaluator evaluator;
    nlohmann::json bonds;
    bool validated = true;
    mutable std::atomic<double> max_abs_seen{0.0};
  };

  std::shared_ptr<const Session> find(const QueryParams& query) const;
  nlohmann::json session_json(const Session& s) const;

  mutable std::shared_mutex sessions_mutex_;
  std::mutex create_mutex_;
  std::map<std::string, std::shared_ptr<const Session>> sessions_;
};

// Registers the API routes and a JSON 404 for unknown paths.
void mount_api(httplib::Server& server, ApiService& api);

// Blocks serving requests until the process is stopped.
void run_server(const ServeOptions& options, std::ostream& log);

}  // namespace zmpo::tools

#endif  // ZMPO_TOOLS_SERVE_HPP_
