/*
   Copyright 2026 The tbelyi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tbelyi/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#ifndef TBELYI_SOURCE_CORPUS_DIR
#define TBELYI_SOURCE_CORPUS_DIR "corpus"
#endif

namespace tbelyi {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema_error(where, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

FieldElement coefficient(const json& v, const std::string& where) {
  if (v.is_number_integer()) return FieldElement(Rational(Integer(v.dump())));
  if (v.is_string()) return FieldElement(parse_rational(v.get<std::string>()));
  schema_error(where, "coefficient must be an integer or a rational string");
}

EllipticCurve curve_from(const json& obj, const std::string& where) {
  static const char* keys[] = {"a1", "a2", "a3", "a4", "a6"};
  std::vector<FieldElement> a;
  for (const char* k : keys) a.push_back(coefficient(field(obj, k, where), where + "." + k));
  std::string label;
  if (auto it = obj.find("label"); it != obj.end()) {
    if (!it->is_string()) schema_error(where, "curve label must be a string");
    label = it->get<std::string>();
  }
  return EllipticCurve(a[0], a[1], a[2], a[3], a[4], label);
}

IsogenyMap isogeny_from(const json& obj, const std::string& where) {
  EllipticCurve source = curve_from(field(obj, "source", where), where + ".source");
  EllipticCurve target = curve_from(field(obj, "target", where), where + ".target");
  return IsogenyMap::parse(source, target, string_field(obj, "xi", where), string_field(obj, "omega", where));
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(where, std::string("invalid JSON: ") + e.what());
  }
}

CorpusEntry entry_from(const json& obj, const std::string& where_in) {
  std::string label = string_field(obj, "label", where_in);
  std::string where = where_in + " (" + label + ")";
  EllipticCurve curve = curve_from(field(obj, "curve", where), where + ".curve");
  std::string map = string_field(obj, "map", where);
  CorpusEntry e{label, curve, map, {}, std::nullopt, {}, {}};
  if (auto it = obj.find("expected"); it != obj.end()) {
    const json& ex = *it;
    if (!ex.is_object()) schema_error(where, "\"expected\" must be an object");
    if (auto r = ex.find("ram_indices"); r != ex.end()) {
      if (!r->is_array()) schema_error(where, "ram_indices must be an array");
      std::vector<int> v;
      for (const auto& k : *r) {
        if (!k.is_number_integer() || k.get<int>() < 1) schema_error(where, "ram_indices must be positive integers");
        v.push_back(k.get<int>());
      }
      std::sort(v.begin(), v.end());
      e.expected.ram_indices = v;
    }
    if (auto p = ex.find("points"); p != ex.end()) {
      if (!p->is_array()) schema_error(where, "points must be an array");
      std::vector<CurvePoint> pts;
      for (const auto& s : *p) {
        if (!s.is_string()) schema_error(where, "points must be strings");
        CurvePoint P = parse_point(s.get<std::string>());
        if (!on_curve(curve, P)) schema_error(where, "expected point " + P.to_string() + " is not on the curve");
        pts.push_back(P);
      }
      e.expected.points = pts;
    }
    if (auto g = ex.find("group"); g != ex.end()) {
      if (!g->is_string()) schema_error(where, "group must be a string");
      e.expected.group = parse_group(g->get<std::string>());
    }
    if (auto t = ex.find("all_torsion"); t != ex.end()) {
      if (!t->is_boolean()) schema_error(where, "all_torsion must be a boolean");
      e.expected.all_torsion = t->get<bool>();
    }
  }
  if (auto it = obj.find("decomposition"); it != obj.end()) {
    const json& d = *it;
    Decomposition dec{string_field(d, "phi", where + ".decomposition"), std::nullopt, std::nullopt};
    if (auto g = d.find("gamma"); g != d.end()) {
      if (!g->is_string()) schema_error(where, "gamma must be a string");
      dec.gamma = g->get<std::string>();
    }
    if (auto p = d.find("psi"); p != d.end()) dec.psi = isogeny_from(*p, where + ".decomposition.psi");
    if (dec.gamma.has_value() == dec.psi.has_value())
      schema_error(where, "a decomposition needs exactly one of \"gamma\" and \"psi\"");
    e.decomposition = dec;
  }
  if (auto it = obj.find("sources"); it != obj.end()) {
    if (!it->is_array()) schema_error(where, "sources must be an array");
    for (const auto& s : *it) e.sources.push_back(s.get<std::string>());
  }
  if (auto it = obj.find("variant_of"); it != obj.end()) e.variant_of = it->get<std::string>();
  return e;
}

}  // namespace

CurvePoint parse_point(std::string_view text) {
  std::string s(text);
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s == "O") return CurvePoint::infinity();
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorCode::ParseError, "point must be O or (x, y): '" + std::string(text) + "'");
  std::string inner = s.substr(1, s.size() - 2);
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) {
      if (comma != std::string::npos) throw Error(ErrorCode::ParseError, "too many coordinates in '" + s + "'");
      comma = i;
    }
  }
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "missing ',' in '" + s + "'");
  return CurvePoint(FieldElement::parse(inner.substr(0, comma)), FieldElement::parse(inner.substr(comma + 1)));
}

EllipticCurve curve_from_json_text(const std::string& json_text) {
  return curve_from(parse_json(json_text, "curve"), "curve");
}

IsogenyMap isogeny_from_json_text(const std::string& json_text) {
  return isogeny_from(parse_json(json_text, "isogeny"), "isogeny");
}

std::vector<CorpusEntry> parse_corpus(const std::string& json_text) {
  json doc = parse_json(json_text, "corpus");
  if (!doc.is_array()) schema_error("corpus", "top level must be an array");
  std::vector<CorpusEntry> out;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string where = "entry " + std::to_string(i);
    if (doc[i].is_object()) {
      if (auto l = doc[i].find("label"); l != doc[i].end() && l->is_string()) where += " '" + l->get<std::string>() + "'";
    }
    try {
      out.push_back(entry_from(doc[i], where));
    } catch (const json::exception& e) {
      schema_error(where, e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SchemaError) throw;
      schema_error(where, e.what());
    }
    if (!labels.insert(out.back().label).second) schema_error(where, "duplicate label");
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw Error(ErrorCode::FileNotFound, path);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path);
  return parse_corpus(buf.str());
}

std::string bundled_corpus_dir() {
  if (const char* env = std::getenv("BELYI_CORPUS_DIR"); env != nullptr && *env != '\0') return env;
  return TBELYI_SOURCE_CORPUS_DIR;
}

std::string bundled_corpus_path() { return (std::filesystem::path(bundled_corpus_dir()) / "tables.json").string(); }

std::vector<CorpusEntry> load_bundled_corpus() { return load_corpus(bundled_corpus_path()); }

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, const std::string& label) {
  for (const auto& e : corpus) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

}  // namespace tbelyi
