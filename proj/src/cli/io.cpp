// Copyright 2026 The hdshapes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include "hdshapes/error.hpp"
#include "hdshapes/io.hpp"

namespace hdshapes {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "ndjson") return Format::kNdjson;
  fail(ErrorCode::kParameter,
       "unknown format '" + std::string(name) + "' (expected csv or ndjson)");
}

std::string to_string(Format format) {
  return format == Format::kCsv ? "csv" : "ndjson";
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_csv(std::ostream& os, const Dataset& ds) {
  const auto names = ds.column_names();
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j > 0) os << ',';
    os << names[j];
  }
  if (ds.has_labels()) os << (names.empty() ? "" : ",") << "cluster";
  os << "\r\n";
  const Matrix& x = ds.points();
  std::string line;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    line.clear();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (j > 0) line += ',';
      line += format_double(x(i, j));
    }
    if (ds.has_labels()) {
      if (x.cols() > 0) line += ',';
      line += csv_field((*ds.labels())[static_cast<std::size_t>(i)]);
    }
    line += "\r\n";
    os << line;
  }
}

void write_ndjson(std::ostream& os, const Dataset& ds) {
  const auto names = ds.column_names();
  const Matrix& x = ds.points();
  std::string line;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    line = "{";
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (j > 0) line += ',';
      line += '"' + names[static_cast<std::size_t>(j)] + "\":";
      line += format_double(x(i, j));
    }
    if (ds.has_labels()) {
      if (x.cols() > 0) line += ',';
      line += "\"cluster\":";
      line += json((*ds.labels())[static_cast<std::size_t>(i)]).dump();
    }
    line += "}\n";
    os << line;
  }
}

void write_dataset(std::ostream& os, const Dataset& ds, Format format) {
  if (format == Format::kCsv) {
    write_csv(os, ds);
  } else {
    write_ndjson(os, ds);
  }
}

// ---------------------------------------------------------------------------
// JSON conversion.

namespace {

std::size_t get_count(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) {
    return static_cast<std::size_t>(j.get<long long>());
  }
  throw ConfigError(path, "expected a non-negative integer");
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  return j.get<double>();
}

bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected true or false");
  return j.get<bool>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Interval get_interval(const json& j, const std::string& path) {
  get_array(j, path);
  if (j.size() != 2) throw ConfigError(path, "expected two numbers");
  return {get_number(j[0], at(path, 0)), get_number(j[1], at(path, 1))};
}

Matrix get_matrix(const json& j, const std::string& path) {
  get_array(j, path);
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    get_array(j[r], at(path, r));
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) {
      throw ConfigError(at(path, r), "expected " + std::to_string(cols) +
                                         " entries like the first row, got " +
                                         std::to_string(j[r].size()));
    }
  }
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          get_number(j[r][c], at(at(path, r), c));
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json interval_to_json(const Interval& v) { return json::array({v.first, v.second}); }

json plan_to_json(const RotationPlan& plan) {
  json steps = json::array();
  for (const auto& step : plan.steps) {
    steps.push_back({{"i", step.i}, {"j", step.j}, {"angle", step.angle}});
  }
  return {{"dim", plan.dim}, {"steps", std::move(steps)}};
}

RotationPlan plan_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object or null");
  for (const auto& [key, value] : j.items()) {
    if (key != "dim" && key != "steps") {
      throw ConfigError(path + "." + key, "unknown rotation field");
    }
  }
  if (!j.contains("dim")) throw ConfigError(path + ".dim", "missing");
  RotationPlan plan;
  plan.dim = get_count(j["dim"], path + ".dim");
  if (j.contains("steps")) {
    const std::string steps_path = path + ".steps";
    const json& steps = get_array(j["steps"], steps_path);
    for (std::size_t s = 0; s < steps.size(); ++s) {
      const std::string step_path = at(steps_path, s);
      if (!steps[s].is_object()) throw ConfigError(step_path, "expected an object");
      for (const char* key : {"i", "j", "angle"}) {
        if (!steps[s].contains(key)) {
          throw ConfigError(step_path + "." + key, "missing");
        }
      }
      plan.steps.push_back({get_count(steps[s]["i"], step_path + ".i"),
                            get_count(steps[s]["j"], step_path + ".j"),
                            get_number(steps[s]["angle"], step_path + ".angle")});
    }
  }
  return plan;
}

}  // namespace

json params_to_json(const ShapeParams& q) {
  json j = json::object();
  if (q.n) j["n"] = *q.n;
  if (q.p) j["p"] = *q.p;
  if (q.k) j["k"] = *q.k;
  if (q.h) j["h"] = *q.h;
  if (q.ratio) j["ratio"] = *q.ratio;
  if (q.s) j["s"] = matrix_to_json(*q.s);
  if (q.r) j["r"] = *q.r;
  if (q.w) j["w"] = interval_to_json(*q.w);
  if (q.steps) j["steps"] = *q.steps;
  if (q.spins) j["spins"] = *q.spins;
  if (q.hc) j["hc"] = *q.hc;
  if (q.non_fac) j["non_fac"] = *q.non_fac;
  if (q.l) j["l"] = *q.l;
  if (q.l_vec) j["l_vec"] = interval_to_json(*q.l_vec);
  if (q.rt) j["rt"] = *q.rt;
  if (q.rb) j["rb"] = *q.rb;
  if (q.n_vec) j["n_vec"] = *q.n_vec;
  if (q.r_vec) j["r_vec"] = interval_to_json(*q.r_vec);
  if (q.spe) j["spe"] = *q.spe;
  if (q.range) j["range"] = interval_to_json(*q.range);
  if (q.allow_share) j["allow_share"] = *q.allow_share;
  return j;
}

ShapeParams params_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  ShapeParams q;
  for (const auto& [key, v] : j.items()) {
    const std::string where = path.empty() ? key : path + "." + key;
    if (key == "n") {
      q.n = get_count(v, where);
    } else if (key == "p") {
      q.p = get_count(v, where);
    } else if (key == "k") {
      q.k = get_count(v, where);
    } else if (key == "h") {
      q.h = get_number(v, where);
    } else if (key == "ratio") {
      q.ratio = get_number(v, where);
    } else if (key == "s") {
      q.s = get_matrix(v, where);
    } else if (key == "r") {
      q.r = get_number(v, where);
    } else if (key == "w") {
      q.w = get_interval(v, where);
    } else if (key == "steps") {
      q.steps = get_count(v, where);
    } else if (key == "spins") {
      q.spins = get_count(v, where);
    } else if (key == "hc") {
      q.hc = get_number(v, where);
    } else if (key == "non_fac") {
      q.non_fac = get_number(v, where);
    } else if (key == "l") {
      q.l = get_number(v, where);
    } else if (key == "l_vec") {
      q.l_vec = get_interval(v, where);
    } else if (key == "rt") {
      q.rt = get_number(v, where);
    } else if (key == "rb") {
      q.rb = get_number(v, where);
    } else if (key == "n_vec") {
      get_array(v, where);
      std::vector<std::size_t> counts;
      for (std::size_t i = 0; i < v.size(); ++i) {
        counts.push_back(get_count(v[i], at(where, i)));
      }
      q.n_vec = std::move(counts);
    } else if (key == "r_vec") {
      q.r_vec = get_interval(v, where);
    } else if (key == "spe") {
      q.spe = get_number(v, where);
    } else if (key == "range") {
      q.range = get_interval(v, where);
    } else if (key == "allow_share") {
      q.allow_share = get_bool(v, where);
    } else {
      throw ConfigError(where, "unknown shape parameter");
    }
  }
  return q;
}

json spec_to_json(const MultiClusterSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["loc"] = matrix_to_json(spec.loc);
  j["scale"] = spec.scale;
  j["shape"] = spec.shape;
  if (!spec.rotation.empty()) {
    json rotations = json::array();
    for (const auto& rotation : spec.rotation) {
      if (!rotation) {
        rotations.push_back(nullptr);
      } else if (const auto* plan = std::get_if<RotationPlan>(&*rotation)) {
        rotations.push_back(plan_to_json(*plan));
      } else {
        fail(ErrorCode::kShape,
             "explicit rotation matrices cannot be written to a config");
      }
    }
    j["rotation"] = std::move(rotations);
  }
  j["is_bkg"] = spec.is_bkg;
  if (!spec.extras.empty()) {
    json extras = json::array();
    for (const auto& params : spec.extras) extras.push_back(params_to_json(params));
    j["extras"] = std::move(extras);
  }
  j["shuffle"] = spec.shuffle;
  return j;
}

MultiClusterSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("(top level)", "expected an object");
  for (const char* key : {"n", "loc", "scale", "shape"}) {
    if (!j.contains(key)) throw ConfigError(key, "missing required field");
  }
  MultiClusterSpec spec;
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      get_array(v, key);
      for (std::size_t i = 0; i < v.size(); ++i) {
        spec.n.push_back(get_count(v[i], at(key, i)));
      }
    } else if (key == "k") {
      spec.k = get_count(v, key);
    } else if (key == "loc") {
      spec.loc = get_matrix(v, key);
    } else if (key == "scale") {
      get_array(v, key);
      for (std::size_t i = 0; i < v.size(); ++i) {
        spec.scale.push_back(get_number(v[i], at(key, i)));
      }
    } else if (key == "shape") {
      get_array(v, key);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string()) throw ConfigError(at(key, i), "expected a string");
        spec.shape.push_back(v[i].get<std::string>());
      }
    } else if (key == "rotation") {
      get_array(v, key);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_null()) {
          spec.rotation.emplace_back(std::nullopt);
        } else {
          spec.rotation.emplace_back(Rotation{plan_from_json(v[i], at(key, i))});
        }
      }
    } else if (key == "is_bkg") {
      spec.is_bkg = get_bool(v, key);
    } else if (key == "extras") {
      get_array(v, key);
      for (std::size_t i = 0; i < v.size(); ++i) {
        spec.extras.push_back(params_from_json(v[i], at(key, i)));
      }
    } else if (key == "shuffle") {
      spec.shuffle = get_bool(v, key);
    } else {
      throw ConfigError(key, "unknown field");
    }
  }
  if (!j.contains("k")) spec.k = spec.shape.size();
  return spec;
}

json parse_json_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size() + 1);
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Keep only the description after the library's own location prefix.
    if (const auto pos = what.find(": "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw ConfigError("line " + std::to_string(line) + ", column " +
                          std::to_string(column),
                      what);
  }
}

}  // namespace hdshapes
