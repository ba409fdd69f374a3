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

// Batch front end over the C API. Exit codes: 0 clean, 1 mismatch or failed check, 2 usage or runtime error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tbelyi/tbelyi.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

struct Failure {
  belyi_error code;
  std::string message;
};

void check(belyi_error code) {
  if (code != BELYI_OK) throw Failure{code, belyi_last_error()};
}

struct CString {
  char* p = nullptr;
  ~CString() { belyi_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using CorpusPtr = std::unique_ptr<belyi_corpus, decltype(&belyi_corpus_free)>;
using ResultPtr = std::unique_ptr<belyi_result, decltype(&belyi_result_free)>;

CorpusPtr load(const std::string& path) {
  belyi_corpus* c = nullptr;
  check(path.empty() ? belyi_corpus_load_bundled(&c) : belyi_corpus_load(path.c_str(), &c));
  return CorpusPtr(c, belyi_corpus_free);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  f.close();
  if (!f) throw Failure{BELYI_E_IO, "cannot write " + path};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{BELYI_E_FILE_NOT_FOUND, "cannot open " + path};
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void add_config_options(CLI::App* cmd, belyi_config& cfg) {
  cmd->add_option("--torsion-bound", cfg.torsion_bound, "Largest point order searched")->check(CLI::PositiveNumber);
  cmd->add_option("--closure-bound", cfg.closure_bound, "Largest subgroup closure built")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", cfg.series_precision, "Initial local series precision")->check(CLI::Range(4, 4096));
  cmd->add_option("--timeout", cfg.timeout_seconds, "Seconds allowed per entry")->check(CLI::NonNegativeNumber);
}

int run_and_report(const CorpusPtr& corpus, const belyi_config& cfg, belyi_format format, const std::string& out) {
  belyi_result* r = nullptr;
  check(belyi_run(corpus.get(), &cfg, &r));
  ResultPtr result(r, belyi_result_free);
  CString text;
  check(belyi_result_render(result.get(), format, &text.p));
  emit(out, text.str());
  belyi_summary s = belyi_result_summary(result.get());
  std::cerr << "total " << s.total << ": ok " << s.ok << ", mismatch " << s.mismatch << ", unresolved "
            << s.unresolved << ", timeout " << s.timeout << "; all-torsion " << s.all_torsion << "\n";
  for (std::size_t i = 0; i < belyi_result_size(result.get()); ++i) {
    if (belyi_result_status(result.get(), i) != BELYI_STATUS_MISMATCH) continue;
    CString m;
    check(belyi_result_mismatches(result.get(), i, &m.p));
    std::cerr << "mismatch " << belyi_result_label(result.get(), i) << ":\n" << m.str();
  }
  return s.mismatch > 0 ? kExitMismatch : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of toroidal Belyi pairs"};
  app.set_version_flag("--version", std::string(belyi_version()));
  app.require_subcommand(1);

  belyi_config cfg = belyi_config_default();
  const std::map<std::string, belyi_format> formats{
      {"json", BELYI_FORMAT_JSON}, {"csv", BELYI_FORMAT_CSV}, {"table", BELYI_FORMAT_TABLE}};
  belyi_format format = BELYI_FORMAT_JSON;
  std::string out, corpus_path, pair_label, isogeny_path;
  int mul = 0, max_m = 3;

  auto* analyze = app.add_subcommand("analyze", "Analyze every entry of a corpus file");
  analyze->add_option("corpus", corpus_path, "Corpus JSON file")->required();
  add_config_options(analyze, cfg);
  analyze->add_option("--format", format, "json, csv or table")->transform(CLI::CheckedTransformer(formats));
  analyze->add_option("--out", out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify-tables", "Run the bundled corpus against its recorded tables");
  add_config_options(verify, cfg);
  verify->add_option("--format", format, "json, csv or table")->transform(CLI::CheckedTransformer(formats));
  verify->add_option("--out", out, "Output path (default stdout)");

  auto* compose = app.add_subcommand("compose", "Compose a bundled pair with [m] or an isogeny and verify");
  compose->add_option("--pair", pair_label, "Label of a bundled pair")->required();
  auto* mul_opt = compose->add_option("--mul", mul, "Multiplication-by-m")->check(CLI::PositiveNumber);
  auto* iso_opt = compose->add_option("--isogeny", isogeny_path, "Isogeny JSON file");
  mul_opt->excludes(iso_opt);
  compose->add_option("--corpus", corpus_path, "Corpus file (default bundled)");
  add_config_options(compose, cfg);
  compose->add_option("--out", out, "Output path (default stdout)");

  auto* norm = app.add_subcommand("normalize", "Translation certificate for a bundled pair");
  norm->add_option("--pair", pair_label, "Label of a bundled pair")->required();
  norm->add_option("--corpus", corpus_path, "Corpus file (default bundled)");
  add_config_options(norm, cfg);
  norm->add_option("--out", out, "Output path (default stdout)");

  auto* family = app.add_subcommand("family", "Compose (1 - y)/2 on 36/a/4 with [m] for m = 1..M");
  family->add_option("--max-m", max_m, "Largest multiplier")->required()->check(CLI::PositiveNumber);
  add_config_options(family, cfg);
  family->add_option("--out", out, "Corpus-format output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_and_report(load(corpus_path), cfg, format, out);

    if (*verify) {
      std::cerr << "note: the bundled corpus is a fixed snapshot of the published tables; database-wide counts "
                   "are not recomputed\n";
      return run_and_report(load(""), cfg, format, out);
    }

    if (*compose) {
      if (!*mul_opt && !*iso_opt) throw Failure{BELYI_E_INVALID_ARGUMENT, "compose needs --mul or --isogeny"};
      CorpusPtr corpus = load(corpus_path);
      CString text;
      int ok = 0;
      if (*mul_opt) {
        check(belyi_compose_mul(corpus.get(), pair_label.c_str(), mul, &cfg, &text.p, &ok));
      } else {
        std::string iso = read_file(isogeny_path);
        check(belyi_compose_isogeny(corpus.get(), pair_label.c_str(), iso.c_str(), &cfg, &text.p, &ok));
      }
      emit(out, text.str());
      return ok ? 0 : kExitMismatch;
    }

    if (*norm) {
      CorpusPtr corpus = load(corpus_path);
      CString text;
      int ok = 0;
      check(belyi_normalize(corpus.get(), pair_label.c_str(), &cfg, &text.p, &ok));
      emit(out, text.str());
      return ok ? 0 : kExitMismatch;
    }

    if (*family) {
      CString entries, report;
      int ok = 0;
      check(belyi_family(max_m, &cfg, &entries.p, &report.p, &ok));
      emit(out, entries.str());
      if (!ok) std::cerr << report.str();
      std::cerr << "family m = 1.." << max_m << ": " << (ok ? "all properties hold" : "violations found") << "\n";
      return ok ? 0 : kExitMismatch;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  }
  return kExitError;
}
