// Copyright 2026 The qcc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qcc/driver/toolchain.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcc/error.hpp"

namespace qcc::driver {

void ToolchainConfig::validate() const {
  const std::pair<const char*, const std::string*> templates[] = {
      {"cxx", &cxx_cmd}, {"cuda", &cuda_cmd}, {"mpi", &mpi_cmd}, {"linker", &linker_cmd}};
  for (const auto& [name, tmpl] : templates) {
    if (tmpl->find("{input}") == std::string::npos ||
        tmpl->find("{output}") == std::string::npos) {
      throw ConfigError(std::string(name) + " command must contain {input} and {output}");
    }
  }
  if (!runner_cmd.empty() && runner_cmd.find("{input}") == std::string::npos) {
    throw ConfigError("runner command must contain {input}");
  }
}

ToolchainConfig parse_toolchain_config(std::string_view json_text, ToolchainConfig base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("toolchain config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("toolchain config must be a JSON object");
  const std::pair<const char*, std::string*> fields[] = {
      {"cxx", &base.cxx_cmd},       {"cuda", &base.cuda_cmd},
      {"mpi", &base.mpi_cmd},       {"linker", &base.linker_cmd},
      {"runner", &base.runner_cmd}, {"cuda_arch", &base.cuda_arch}};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& [name, field] : fields) {
      if (key != name) continue;
      if (!value.is_string()) throw ConfigError("\"" + key + "\" must be a string");
      *field = value.get<std::string>();
      known = true;
    }
    if (!known) throw ConfigError("unknown toolchain key \"" + key + "\"");
  }
  base.validate();
  return base;
}

ToolchainConfig load_toolchain_config(const std::string& path, ToolchainConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open toolchain config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_toolchain_config(ss.str(), std::move(base));
}

ToolchainConfig resolve_toolchain(const std::optional<std::string>& explicit_path) {
  ToolchainConfig config;
  if (const char* env = std::getenv("QCC_TOOLCHAIN"); env != nullptr && *env != '\0') {
    config = load_toolchain_config(env, config);
  }
  if (explicit_path) config = load_toolchain_config(*explicit_path, config);
  return config;
}

namespace {

std::string substitute(std::string token, const std::string& slot, const std::string& value) {
  for (auto pos = token.find(slot); pos != std::string::npos;
       pos = token.find(slot, pos + value.size())) {
    token.replace(pos, slot.size(), value);
  }
  return token;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

std::vector<std::string> expand_template(std::string_view tmpl, const TemplateArgs& args) {
  std::vector<std::string> argv;
  std::istringstream in{std::string(tmpl)};
  std::string token;
  while (in >> token) {
    if (token == "{input}") {
      argv.insert(argv.end(), args.inputs.begin(), args.inputs.end());
    } else if (token == "{flags}") {
      argv.insert(argv.end(), args.flags.begin(), args.flags.end());
    } else {
      token = substitute(std::move(token), "{input}", join(args.inputs));
      token = substitute(std::move(token), "{output}", args.output);
      token = substitute(std::move(token), "{flags}", join(args.flags));
      token = substitute(std::move(token), "{arch}", args.arch);
      argv.push_back(std::move(token));
    }
  }
  return argv;
}

bool command_resolvable(const std::string& program) {
  if (program.empty()) return false;
  if (program.find('/') != std::string::npos) return ::access(program.c_str(), X_OK) == 0;
  const char* path = std::getenv("PATH");
  if (path == nullptr) return false;
  std::istringstream dirs{std::string(path)};
  std::string dir;
  while (std::getline(dirs, dir, ':')) {
    if (dir.empty()) dir = ".";
    if (::access((dir + "/" + program).c_str(), X_OK) == 0) return true;
  }
  return false;
}

std::string render_command(const std::vector<std::string>& argv) {
  std::string out;
  for (const auto& arg : argv) {
    if (!out.empty()) out += ' ';
    const bool plain = !arg.empty() && arg.find_first_of(" \t\"'\\$`") == std::string::npos;
    if (plain) {
      out += arg;
    } else {
      out += '\'';
      for (const char c : arg) {
        if (c == '\'') {
          out += "'\\''";
        } else {
          out += c;
        }
      }
      out += '\'';
    }
  }
  return out;
}

}  // namespace qcc::driver
