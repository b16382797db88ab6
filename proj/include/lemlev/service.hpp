// Copyright 2026 The lemlev Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Stateless HTTP/JSON facade over an Engine. Documents travel in the
// request body; overrides persist as `#i#` runs inside the text.

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include <httplib.h>
#include <json.hpp>

#include "lemlev/engine.hpp"
#include "lemlev/markup.hpp"
#include "lemlev/report.hpp"
#include "lemlev/utf8.hpp"

namespace lemlev {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8088;
  std::filesystem::path resources;
  std::string profile = "default";
  Palette palette;
  std::string cors_origin = "*";
  std::size_t max_body_bytes = 1 << 20;
  DigitScript digits = DigitScript::ArabicIndic;
};

/// Reads a JSON config. Relative resource paths resolve against the
/// config file's directory. Throws std::runtime_error.
inline ServiceConfig load_service_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("invalid config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
  ServiceConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "host") {
        cfg.host = value.get<std::string>();
      } else if (key == "port") {
        cfg.port = value.get<int>();
      } else if (key == "resources") {
        std::filesystem::path p = value.get<std::string>();
        cfg.resources = p.is_absolute() ? p : path.parent_path() / p;
      } else if (key == "profile") {
        cfg.profile = value.get<std::string>();
        profile_by_name(cfg.profile);
      } else if (key == "palette") {
        cfg.palette.apply(value);
      } else if (key == "cors_origin") {
        cfg.cors_origin = value.get<std::string>();
      } else if (key == "max_body_bytes") {
        cfg.max_body_bytes = value.get<std::size_t>();
      } else if (key == "digits") {
        const auto script = digit_script_from_string(value.get<std::string>());
        if (!script) throw std::invalid_argument("digits must be ascii or arabic-indic");
        cfg.digits = *script;
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("invalid config " + path.string() + ": " + e.what());
  }
  return cfg;
}

struct Reply {
  int status = 200;
  std::string body;
};

class Service {
 public:
  explicit Service(ServiceConfig config) : config_(std::move(config)) {}

  const ServiceConfig& config() const noexcept { return config_; }

  void set_engine(std::shared_ptr<const Engine> engine) {
    std::lock_guard lock(mutex_);
    engine_ = std::move(engine);
  }
  std::shared_ptr<const Engine> engine() const {
    std::lock_guard lock(mutex_);
    return engine_;
  }
  bool ready() const { return engine() != nullptr; }

  Reply health() const {
    const auto eng = engine();
    if (!eng) return json_reply(503, {{"status", "loading"}});
    return json_reply(200, {{"status", "ok"},
                            {"resources", eng->resource_counts()},
                            {"profile", config_.profile},
                            {"palette", config_.palette.to_json()}});
  }

  Reply analyze(const std::string& body) const {
    const auto eng = engine();
    if (!eng) return not_ready();
    if (body.size() > config_.max_body_bytes) return error(413, "request body too large");
    nlohmann::json req;
    if (!parse_body(body, req) || !req.is_object() || !req.contains("text") || !req["text"].is_string()) {
      return error(400, "expected a JSON object with a string \"text\"");
    }
    const auto text = req["text"].get<std::string>();
    if (!utf8::is_valid(text)) return error(400, "text is not valid UTF-8");
    return {200, eng->analyze_json(text)};
  }

  Reply word(const std::string& surface) const {
    const auto eng = engine();
    if (!eng) return not_ready();
    if (surface.empty()) return error(400, "empty surface");
    if (!utf8::is_valid(surface)) return error(400, "surface is not valid UTF-8");
    return json_reply(200, lookup_json(eng->lookup(surface)));
  }

  Reply markup(const std::string& body) const {
    const auto eng = engine();
    if (!eng) return not_ready();
    if (body.size() > config_.max_body_bytes) return error(413, "request body too large");
    nlohmann::json req;
    if (!parse_body(body, req) || !req.is_object() || !req.contains("text") ||
        !req["text"].is_string() || !req.contains("mode") || !req["mode"].is_string()) {
      return error(400, "expected {\"text\": string, \"mode\": string}");
    }
    const auto mode = markup_mode_from_string(req["mode"].get<std::string>());
    if (!mode) return error(400, "unknown mode; expected show, minimize, hide or delete");
    const auto text = req["text"].get<std::string>();
    if (!utf8::is_valid(text)) return error(400, "text is not valid UTF-8");
    const AnnotatedDocument doc = eng->annotate(text);
    const MarkupResult result = apply_mode(text, *mode, doc.words, config_.digits);
    nlohmann::json spans = nlohmann::json::array();
    for (const auto& s : result.spans) {
      spans.push_back({{"start", s.start},
                       {"end", s.end},
                       {"level", s.level},
                       {"digit_script", to_string(s.digit_script)},
                       {"style", to_string(s.style)}});
    }
    return json_reply(200, {{"text", result.text}, {"mode", to_string(*mode)}, {"spans", spans}});
  }

  Reply assign(const std::string& body) const {
    const auto eng = engine();
    if (!eng) return not_ready();
    if (body.size() > config_.max_body_bytes) return error(413, "request body too large");
    nlohmann::json req;
    if (!parse_body(body, req) || !req.is_object() || !req.contains("text") || !req["text"].is_string()) {
      return error(400, "expected a JSON object with a string \"text\"");
    }
    const auto text = req["text"].get<std::string>();
    if (!utf8::is_valid(text)) return error(400, "text is not valid UTF-8");
    if (!req.contains("level") || !req["level"].is_number_integer()) {
      return error(400, "level must be an integer in 1..5");
    }
    const auto level = req["level"].get<long long>();
    if (level < 1 || level > 5) return error(400, "level must be an integer in 1..5");
    if (!req.contains("target") || !req["target"].is_object()) return error(400, "missing target");
    const auto& target = req["target"];

    if (target.contains("occurrence_index")) {
      const auto& idx = target["occurrence_index"];
      if (!idx.is_number_integer()) return error(400, "occurrence_index must be an integer");
      if (idx.get<long long>() < 0) return error(404, "occurrence index out of range");
      try {
        return json_reply(200, {{"text", assign_level(text, static_cast<int>(level),
                                                      idx.get<std::size_t>(), config_.digits)},
                                {"assigned", 1}});
      } catch (const std::out_of_range&) {
        return error(404, "occurrence index out of range");
      }
    }
    if (target.contains("surface") && target["surface"].is_string() && target.contains("all") &&
        target["all"].is_boolean() && target["all"].get<bool>()) {
      const auto surface = target["surface"].get<std::string>();
      if (!utf8::is_valid(surface) || surface.empty()) return error(400, "invalid surface");
      std::size_t assigned = 0;
      std::string out = assign_level_all(text, static_cast<int>(level), surface, eng->profile(),
                                         config_.digits, &assigned);
      return json_reply(200, {{"text", std::move(out)}, {"assigned", assigned}});
    }
    return error(400, "target must be {occurrence_index} or {surface, all: true}");
  }

  /// Registers the /v1 routes and CORS handling on `server`.
  void mount(httplib::Server& server) const {
    server.set_payload_max_length(config_.max_body_bytes);
    const auto send = [](httplib::Response& res, const Reply& r) {
      res.status = r.status;
      res.set_content(r.body, "application/json; charset=utf-8");
    };
    server.Get("/v1/health", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, health());
    });
    server.Post("/v1/analyze", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, analyze(req.body));
    });
    server.Get(R"(/v1/word/(.*))", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, word(req.matches[1].str()));
    });
    server.Post("/v1/markup", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, markup(req.body));
    });
    server.Post("/v1/assign", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, assign(req.body));
    });
    server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    const std::string origin = config_.cors_origin;
    server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
  }

 private:
  static bool parse_body(const std::string& body, nlohmann::json& out) {
    out = nlohmann::json::parse(body, nullptr, false);
    return !out.is_discarded();
  }
  static Reply json_reply(int status, const nlohmann::json& j) { return {status, j.dump() + "\n"}; }
  static Reply error(int status, const std::string& message) {
    return json_reply(status, {{"error", message}, {"status", status}});
  }
  static Reply not_ready() { return error(503, "resources are still loading"); }

  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const Engine> engine_;
};

}  // namespace lemlev
