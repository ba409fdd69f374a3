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

#ifndef TBELYI_CORPUS_HPP
#define TBELYI_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tbelyi/isogeny.hpp"

namespace tbelyi {

struct Expectation {
  std::optional<std::vector<int>> ram_indices;  // sorted
  std::optional<std::vector<CurvePoint>> points;
  std::optional<GroupStructure> group;
  std::optional<bool> all_torsion;
};

/// beta = gamma o phi, or beta = phi o psi when psi is present.
struct Decomposition {
  std::string phi;
  std::optional<std::string> gamma;
  std::optional<IsogenyMap> psi;

  bool is_isogeny() const { return psi.has_value(); }
};

struct CorpusEntry {
  std::string label;
  EllipticCurve curve;
  std::string map;
  Expectation expected;
  std::optional<Decomposition> decomposition;
  std::vector<std::string> sources;
  std::string variant_of;

  BelyiPair pair() const { return BelyiPair(label, curve, map); }
};

/// "O" or "(x, y)" with coordinates in the expression grammar.
CurvePoint parse_point(std::string_view text);

/// {"a1": ..., "a6": ..., "label": ...}; coefficients are rational strings or integers.
EllipticCurve curve_from_json_text(const std::string& json_text);

/// {"source": curve, "target": curve, "xi": ..., "omega": ...}.
IsogenyMap isogeny_from_json_text(const std::string& json_text);

/// Parses a JSON array of entries. Throws SchemaError naming the entry.
std::vector<CorpusEntry> parse_corpus(const std::string& json_text);
/// Throws FileNotFound, IoError or SchemaError.
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// $BELYI_CORPUS_DIR, or the directory the sources were built from.
std::string bundled_corpus_dir();
std::string bundled_corpus_path();
std::vector<CorpusEntry> load_bundled_corpus();

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, const std::string& label);

}  // namespace tbelyi

#endif
