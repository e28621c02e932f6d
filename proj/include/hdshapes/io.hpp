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

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hdshapes/composer.hpp"
#include "hdshapes/dataset.hpp"
#include "hdshapes/shapes.hpp"
#include "json.hpp"

namespace hdshapes {

enum class Format { kCsv, kNdjson };

Format parse_format(std::string_view name);
std::string to_string(Format format);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// Header row x1..xp (plus `cluster` when labeled), then one row per point.
void write_csv(std::ostream& os, const Dataset& ds);
// One JSON object per row keyed by column name.
void write_ndjson(std::ostream& os, const Dataset& ds);
void write_dataset(std::ostream& os, const Dataset& ds, Format format);

// Problems in a multicluster config or manifest. `where` names the field
// path ("scale[2]") or the line/column of a syntax error.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Keys are the ShapeParams field names; only set fields are written.
nlohmann::json params_to_json(const ShapeParams& params);
ShapeParams params_from_json(const nlohmann::json& j, const std::string& path);

// Config document with the MultiClusterSpec field names. Rotations are
// {"dim": d, "steps": [{"i": 1, "j": 2, "angle": 0.5}, ...]} or null.
// Explicit rotation matrices cannot be serialized.
nlohmann::json spec_to_json(const MultiClusterSpec& spec);
MultiClusterSpec spec_from_json(const nlohmann::json& j);

// Parses a config document, reporting syntax errors by line and column.
nlohmann::json parse_json_document(const std::string& text);

}  // namespace hdshapes
