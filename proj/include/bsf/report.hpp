// Copyright 2026 The bsf Authors
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

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bsf/version.hpp"

namespace bsf {

/// Floats are rendered with 12 significant digits in every output format,
/// so text, CSV and JSON carry identical numeric payloads.
inline std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// Machine-readable result of one CLI command. The payload appears in
/// full in JSON output; the optional table view drives CSV and the text
/// rendering. No timestamps: identical inputs give identical bytes.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> table_header;
  std::vector<std::vector<std::string>> table_rows;
  std::vector<std::string> notes;

  std::string digest() const {
    std::string blob = command;
    for (const auto& [k, v] : inputs) blob += "\x1f" + k + "=" + v;
    return fnv1a_hex(blob);
  }
};

inline std::string render_json(const Document& doc) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  auto in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.inputs) in[k] = v;
  j["inputs"] = in;
  j["digest"] = doc.digest();
  j["payload"] = doc.payload;
  if (!doc.table_header.empty()) {
    auto table = nlohmann::ordered_json::array();
    for (const auto& row : doc.table_rows) {
      auto obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < doc.table_header.size() && i < row.size(); ++i) {
        obj[doc.table_header[i]] = row[i];
      }
      table.push_back(obj);
    }
    j["table"] = table;
  }
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  j["version"] = kVersion;
  return j.dump(2) + "\n";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline std::string render_csv(const Document& doc) {
  std::ostringstream os;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(row[i]);
    }
    os << '\n';
  };
  emit_row(doc.table_header);
  for (const auto& row : doc.table_rows) emit_row(row);
  return os.str();
}

inline std::string render_text(const Document& doc) {
  std::ostringstream os;
  os << "# bsf " << doc.command << " (v" << kVersion << ", digest " << doc.digest()
     << ")\n";
  for (const auto& [k, v] : doc.inputs) os << "input " << k << " = " << v << "\n";
  for (auto it = doc.payload.begin(); it != doc.payload.end(); ++it) {
    if (it->is_structured()) continue;  // tables and nested records go below
    os << it.key() << ": "
       << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  }
  if (!doc.table_header.empty()) {
    std::vector<std::size_t> width(doc.table_header.size());
    for (std::size_t i = 0; i < doc.table_header.size(); ++i) {
      width[i] = doc.table_header[i].size();
    }
    for (const auto& row : doc.table_rows) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    auto emit_row = [&](const std::vector<std::string>& row) {
      os << "  ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
      }
      os << "\n";
    };
    emit_row(doc.table_header);
    for (const auto& row : doc.table_rows) emit_row(row);
  }
  for (const auto& note : doc.notes) os << "note: " << note << "\n";
  return os.str();
}

inline std::string render(const Document& doc, const std::string& format) {
  if (format == "json") return render_json(doc);
  if (format == "csv") return render_csv(doc);
  return render_text(doc);
}

}  // namespace bsf
