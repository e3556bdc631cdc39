/*
 *   Copyright 2026 The sbawb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Report sink shared by the subcommands: key=value text or one JSON document.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace sbawb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "sbawb/1";

enum class Format { Text, Json };

class Report {
 public:
  Report(std::string command, std::uint64_t seed, std::uint32_t field) {
    doc_["format"] = kFormatTag;
    doc_["command"] = command;
    doc_["seed"] = seed;
    doc_["field"] = field;
    lines_.push_back("format=" + std::string(kFormatTag) + " command=" + command +
                     " seed=" + std::to_string(seed) + " field=" + std::to_string(field));
  }

  /// Scalar field: "key=value" in text, doc[key] in JSON.
  template <typename T>
  void set(const std::string& key, const T& value) {
    doc_[key] = value;
    lines_.push_back(key + "=" + render(Json(value)));
  }

  /// Text-only line; pair it with doc() for the JSON side.
  void line(std::string text) { lines_.push_back(std::move(text)); }
  Json& doc() { return doc_; }

  void emit(std::ostream& os, Format f) const {
    if (f == Format::Json) {
      os << doc_.dump(2) << '\n';
      return;
    }
    for (const auto& l : lines_) os << l << '\n';
  }

  static std::string render(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

 private:
  Json doc_;
  std::vector<std::string> lines_;
};

}  // namespace sbawb
