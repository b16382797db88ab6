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

// lemlev: batch readability annotation, markup transformation, word
// lookup and the HTTP service.
//
// Exit codes: 0 ok, 2 input/output error, 3 resource load error,
// 4 usage error, 5 cannot bind. Diagnostics on stderr are "code\tmessage".

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "lemlev/engine.hpp"
#include "lemlev/service.hpp"

namespace {

enum Exit { kOk = 0, kIo = 2, kResources = 3, kUsage = 4, kBind = 5 };

int fail(int code, const std::string& message) {
  std::cerr << code << '\t' << message << '\n';
  return code;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (!lemlev::utf8::is_valid(text)) throw InputError(path + " is not valid UTF-8");
  return text;
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty()) {
    std::cout << bytes;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw InputError("cannot write " + out_path);
  }
}

struct Common {
  std::string resources;
  std::string profile = "default";
  std::string digits = "arabic-indic";
  std::string config;
};

std::filesystem::path resource_dir(const Common& c, const std::optional<lemlev::ServiceConfig>& cfg) {
  if (!c.resources.empty()) return c.resources;
  if (cfg && !cfg->resources.empty()) return cfg->resources;
  if (const char* env = std::getenv("LEMLEV_RESOURCES")) return env;
  return {};
}

lemlev::Engine load_engine(const Common& c, const std::optional<lemlev::ServiceConfig>& cfg) {
  const auto dir = resource_dir(c, cfg);
  if (dir.empty()) {
    throw lemlev::LoadError(lemlev::LoadError::Kind::MissingFile, "<resources>", 0,
                            "set --resources or LEMLEV_RESOURCES");
  }
  const std::string profile = c.profile != "default" || !cfg ? c.profile : cfg->profile;
  return lemlev::Engine::load(lemlev::ResourcePaths::from_dir(dir), lemlev::profile_by_name(profile));
}

void print_lookup(const lemlev::WordLookup& w) {
  std::cout << w.surface << '\n';
  if (w.groups.empty()) {
    std::cout << "no analyses\n";
    return;
  }
  for (const auto& [level, analyses] : w.groups) {
    std::cout << "  " << lemlev::to_string(level) << '\n';
    for (const auto& a : analyses) {
      std::cout << "    " << a.lemma << "  [" << a.pos << "]  " << a.diac << "  " << a.gloss << "  ("
                << a.prefix.cat << " + " << a.stem.cat << " + " << a.suffix.cat << ")\n";
    }
  }
  if (w.chosen) {
    std::cout << "most likely: " << w.chosen->lemma << "  [" << w.chosen->pos << "]\n";
  }
  if (!w.suggestions.empty()) {
    std::cout << "suggestions:\n";
    for (lemlev::Relation rel : lemlev::kAllRelations) {
      for (const auto& s : w.suggestions[rel]) {
        std::cout << "  " << lemlev::to_string(rel) << "  " << s.lemma << "  [" << s.pos << "]  "
                  << lemlev::to_string(s.level) << '\n';
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Arabic word-level readability annotation.\n"
      "Exit codes: 0 ok, 2 io, 3 resources, 4 usage, 5 bind."};
  app.require_subcommand(1);

  Common common;
  app.add_option("--resources", common.resources,
                 "Resource directory (default: $LEMLEV_RESOURCES)");
  app.add_option("--profile", common.profile, "Normalization profile: default or fuzzy")
      ->check(CLI::IsMember({"default", "lookup", "fuzzy"}));
  app.add_option("--digits", common.digits, "Digits for emitted markup: arabic-indic or ascii")
      ->check(CLI::IsMember({"arabic-indic", "arabic", "ascii"}));
  app.add_option("--config", common.config, "Service config JSON (palette, resources, ...)");

  std::string file, format = "json", out, mode, word;
  auto* analyze = app.add_subcommand("analyze", "Annotate a text file");
  analyze->add_option("file", file, "UTF-8 input file")->required();
  analyze->add_option("--format", format, "json, tsv or html");
  analyze->add_option("--out", out, "Output path (default: stdout)");

  auto* markup = app.add_subcommand("markup", "Apply a markup mode to a text file");
  markup->add_option("file", file, "UTF-8 input file")->required();
  markup->add_option("--mode", mode, "show, minimize, hide or delete")->required();
  markup->add_option("--out", out, "Output path (default: stdout)");

  auto* lookup = app.add_subcommand("lookup", "Show all analyses of a word");
  lookup->add_option("word", word, "Arabic word")->required();

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  std::string host;
  int port = -1;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, e.what());
  }

  const auto digit_flag = lemlev::digit_script_from_string(common.digits);
  if (!digit_flag) return fail(kUsage, "unknown digits: " + common.digits);
  try {
    lemlev::profile_by_name(common.profile);
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, e.what());
  }

  std::optional<lemlev::ServiceConfig> cfg;
  if (!common.config.empty()) {
    try {
      cfg = lemlev::load_service_config(common.config);
    } catch (const std::exception& e) {
      return fail(kResources, e.what());
    }
  }
  const lemlev::DigitScript digits =
      common.digits == "arabic-indic" && cfg ? cfg->digits : *digit_flag;

  try {
    if (*serve) {
      lemlev::ServiceConfig sc = cfg.value_or(lemlev::ServiceConfig{});
      if (!host.empty()) sc.host = host;
      if (port >= 0) sc.port = port;
      sc.digits = digits;
      if (common.profile != "default") sc.profile = common.profile;
      const auto dir = resource_dir(common, cfg);
      if (dir.empty()) return fail(kResources, "set --resources, the config, or LEMLEV_RESOURCES");
      sc.resources = dir;

      lemlev::Service service(sc);
      httplib::Server server;
      server.set_socket_options([](socket_t sock) {
        int yes = 1;
        ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
      });
      service.mount(server);
      if (!server.bind_to_port(sc.host, sc.port)) {
        return fail(kBind, "cannot bind " + sc.host + ":" + std::to_string(sc.port));
      }
      std::thread listener([&] { server.listen_after_bind(); });
      server.wait_until_ready();
      try {
        service.set_engine(std::make_shared<const lemlev::Engine>(lemlev::Engine::load(
            lemlev::ResourcePaths::from_dir(sc.resources), lemlev::profile_by_name(sc.profile))));
      } catch (const std::exception& e) {
        server.stop();
        listener.join();
        return fail(kResources, e.what());
      }
      std::cerr << "listening on http://" << sc.host << ":" << sc.port << '\n';
      listener.join();
      return kOk;
    }

    lemlev::Format fmt = lemlev::Format::Json;
    std::optional<lemlev::MarkupMode> m;
    if (*analyze) {
      try {
        fmt = lemlev::format_from_string(format);
      } catch (const lemlev::UnsupportedFormat& e) {
        return fail(kUsage, e.what());
      }
    } else if (*markup) {
      m = lemlev::markup_mode_from_string(mode);
      if (!m) return fail(kUsage, "unknown mode: " + mode);
    }

    std::optional<lemlev::Engine> engine;
    try {
      engine.emplace(load_engine(common, cfg));
    } catch (const lemlev::LoadError& e) {
      return fail(kResources, e.what());
    } catch (const std::invalid_argument& e) {
      return fail(kResources, e.what());
    }

    if (*analyze) {
      const std::string text = read_input(file);
      const auto doc = engine->annotate(text);
      lemlev::EmitOptions opts;
      if (cfg) opts.palette = cfg->palette;
      write_output(out, lemlev::emit(doc, lemlev::stats(doc.words), fmt, opts));
    } else if (*markup) {
      const std::string text = read_input(file);
      const auto doc = engine->annotate(text);
      write_output(out, lemlev::apply_mode(text, *m, doc.words, digits).text);
    } else if (*lookup) {
      if (!lemlev::utf8::is_valid(word)) return fail(kUsage, "word is not valid UTF-8");
      print_lookup(engine->lookup(word));
    }
  } catch (const InputError& e) {
    return fail(kIo, e.what());
  } catch (const std::exception& e) {
    return fail(kIo, e.what());
  }
  return kOk;
}
