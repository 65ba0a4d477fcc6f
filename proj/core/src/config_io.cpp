// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cellsim/config_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>
#include <variant>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace cellsim {

namespace {

namespace pt = boost::property_tree;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    items.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (items.size() == 1 && items.front().empty()) items.clear();
  return items;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const char* expected) {
  throw ConfigError("config field '" + key + "': cannot parse '" + value + "' as " + expected);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    bad_value(key, value, "a number");
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty()) {
    bad_value(key, value, "a nonnegative integer");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string value = trim(text);
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value, "a boolean");
}

std::string format_double(double v) {
  // Shortest text that parses back to the same double.
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
  return std::string(buffer, ptr);
}

template <class T, class F>
std::string join(const std::vector<T>& items, F&& format) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += format(items[i]);
  }
  return out;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"scenario", {"name", "model", "n_grid", "trials_per_n", "master_seed"}},
      {"link", {"power_dbm", "noise_dbm"}},
      {"geometry", {"interferers", "cell_radius_km", "symmetric_radius_km", "interferer_gain_scale"}},
      {"path_loss", {"model", "offset_db", "slope_db", "lambda", "epsilon"}},
      {"schedulers", {"enabled", "jp_enabled"}},
      {"meta", {"artifact_version"}},
  };
  return keys;
}

}  // namespace

ScenarioConfig parse_config(std::istream& in, const std::string& source_name) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source_name + ": line " + std::to_string(e.line()) + ": " + e.message());
  }

  for (const auto& [section, body] : tree) {
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) {
      throw ConfigError(source_name + ": unknown section [" + section + "]");
    }
    if (!body.data().empty()) {
      throw ConfigError(source_name + ": key '" + section + "' must live inside a section");
    }
    for (const auto& [key, value] : body) {
      if (!known->second.contains(key)) {
        throw ConfigError(source_name + ": unknown key '" + section + "." + key + "'");
      }
    }
  }

  auto get = [&](const std::string& path) -> std::optional<std::string> {
    if (auto v = tree.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return trim(*v);
    return std::nullopt;
  };

  ScenarioConfig c;
  try {
    if (auto v = get("scenario.name")) c.name = *v;
    if (auto v = get("scenario.model")) {
      try {
        c.model = parse_channel_model(*v);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config field 'scenario.model': ") + e.what());
      }
    }
    if (auto v = get("scenario.n_grid")) {
      c.n_grid.clear();
      for (const auto& item : split_list(*v)) c.n_grid.push_back(parse_u64("scenario.n_grid", item));
    }
    if (auto v = get("scenario.trials_per_n")) c.trials_per_n = parse_u64("scenario.trials_per_n", *v);
    if (auto v = get("scenario.master_seed")) c.master_seed = parse_u64("scenario.master_seed", *v);
    if (auto v = get("link.power_dbm")) c.power_dbm = parse_double("link.power_dbm", *v);
    if (auto v = get("link.noise_dbm")) c.noise_dbm = parse_double("link.noise_dbm", *v);
    if (auto v = get("geometry.interferers")) c.interferers = parse_u64("geometry.interferers", *v);
    if (auto v = get("geometry.cell_radius_km")) {
      c.cell_radius_km = parse_double("geometry.cell_radius_km", *v);
    }
    if (auto v = get("geometry.symmetric_radius_km")) {
      c.symmetric_radius_km = parse_double("geometry.symmetric_radius_km", *v);
    }
    if (auto v = get("geometry.interferer_gain_scale")) {
      c.interferer_gain_scale.clear();
      for (const auto& item : split_list(*v)) {
        c.interferer_gain_scale.push_back(parse_double("geometry.interferer_gain_scale", item));
      }
    }

    const std::string model = get("path_loss.model").value_or("hata");
    if (model == "hata") {
      if (get("path_loss.lambda") || get("path_loss.epsilon")) {
        throw ConfigError("config section 'path_loss': lambda/epsilon belong to model = generic");
      }
      HataPathLoss hata;
      if (auto v = get("path_loss.offset_db")) hata.offset_db = parse_double("path_loss.offset_db", *v);
      if (auto v = get("path_loss.slope_db")) hata.slope_db = parse_double("path_loss.slope_db", *v);
      c.path_loss = hata;
    } else if (model == "generic") {
      if (get("path_loss.offset_db") || get("path_loss.slope_db")) {
        throw ConfigError("config section 'path_loss': offset_db/slope_db belong to model = hata");
      }
      GenericPathLoss generic;
      if (auto v = get("path_loss.lambda")) generic.lambda = parse_double("path_loss.lambda", *v);
      if (auto v = get("path_loss.epsilon")) generic.epsilon = parse_double("path_loss.epsilon", *v);
      c.path_loss = generic;
    } else {
      throw ConfigError("config field 'path_loss.model': expected hata or generic, got '" + model + "'");
    }

    if (auto v = get("schedulers.enabled")) {
      std::set<SchedulerKind> kinds;
      c.schedulers.clear();
      for (const auto& item : split_list(*v)) {
        const auto kind = parse_scheduler_kind(item);
        if (!kind) throw ConfigError("config field 'schedulers.enabled': unknown scheduler '" + item + "'");
        if (!kinds.insert(*kind).second) {
          throw ConfigError("config field 'schedulers.enabled': '" + item + "' listed twice");
        }
        c.schedulers.push_back(*kind);
      }
    }
    if (auto v = get("schedulers.jp_enabled")) c.jp_enabled = parse_bool("schedulers.jp_enabled", *v);

    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source_name + ": " + e.what());
  }
  return c;
}

ScenarioConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  return parse_config(in, path.string());
}

void write_config(std::ostream& out, const ScenarioConfig& c) {
  out << "[scenario]\n"
      << "name = " << c.name << '\n'
      << "model = " << to_string(c.model) << '\n'
      << "n_grid = " << join(c.n_grid, [](std::size_t n) { return std::to_string(n); }) << '\n'
      << "trials_per_n = " << c.trials_per_n << '\n'
      << "master_seed = " << c.master_seed << "\n\n";
  out << "[link]\n"
      << "power_dbm = " << format_double(c.power_dbm) << '\n'
      << "noise_dbm = " << format_double(c.noise_dbm) << "\n\n";
  out << "[geometry]\n"
      << "interferers = " << c.interferers << '\n'
      << "cell_radius_km = " << format_double(c.cell_radius_km) << '\n'
      << "symmetric_radius_km = " << format_double(c.symmetric_radius_km) << '\n'
      << "interferer_gain_scale = " << join(c.interferer_gain_scale, format_double) << "\n\n";
  out << "[path_loss]\n";
  if (const auto* hata = std::get_if<HataPathLoss>(&c.path_loss)) {
    out << "model = hata\n"
        << "offset_db = " << format_double(hata->offset_db) << '\n'
        << "slope_db = " << format_double(hata->slope_db) << "\n\n";
  } else {
    const auto& generic = std::get<GenericPathLoss>(c.path_loss);
    out << "model = generic\n"
        << "lambda = " << format_double(generic.lambda) << '\n'
        << "epsilon = " << format_double(generic.epsilon) << "\n\n";
  }
  out << "[schedulers]\n"
      << "enabled = "
      << join(c.schedulers, [](SchedulerKind k) { return std::string(to_string(k)); }) << '\n'
      << "jp_enabled = " << (c.jp_enabled ? "true" : "false") << "\n\n";
  out << "[meta]\n"
      << "artifact_version = " << CELLSIM_VERSION << '\n';
}

std::string to_config_string(const ScenarioConfig& config) {
  std::ostringstream out;
  write_config(out, config);
  return out.str();
}

}  // namespace cellsim
