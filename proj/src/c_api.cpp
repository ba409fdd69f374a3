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

#include "tbelyi/tbelyi.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "tbelyi/report.hpp"

struct belyi_corpus {
  std::vector<tbelyi::CorpusEntry> entries;
};

struct belyi_result {
  tbelyi::RunResult run;
};

namespace {

thread_local std::string g_last_error;

using namespace tbelyi;

belyi_error from_code(ErrorCode c) { return static_cast<belyi_error>(static_cast<int>(c) + 1); }

template <class F>
belyi_error guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return BELYI_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BELYI_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BELYI_E_INTERNAL;
  }
}

belyi_error fail(belyi_error code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

RunConfig to_config(const belyi_config* c) {
  RunConfig r;
  if (c) {
    r.torsion_bound = c->torsion_bound;
    r.closure_bound = c->closure_bound;
    r.series_precision = c->series_precision;
    r.timeout_seconds = c->timeout_seconds;
    r.threads = c->threads;
  }
  r.validate();
  return r;
}

/// Analysis options whose checkpoint enforces the configured timeout from now on.
AnalysisOptions to_options(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  double limit = cfg.timeout_seconds;
  auto checkpoint = [start, limit] {
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() >= limit) throw Error(ErrorCode::Timeout, "exceeded " + std::to_string(limit) + " s");
  };
  return AnalysisOptions{cfg.torsion_bound, cfg.closure_bound, cfg.series_precision, checkpoint};
}

const CorpusEntry& lookup(const belyi_corpus* corpus, const char* label) {
  const CorpusEntry* e = find_entry(corpus->entries, label);
  if (!e) throw Error(ErrorCode::InvalidArgument, std::string("no corpus entry labelled '") + label + "'");
  return *e;
}

}  // namespace

extern "C" {

const char* belyi_version(void) { return "0.1.0"; }

const char* belyi_error_name(belyi_error code) {
  switch (code) {
    case BELYI_OK:
      return "Ok";
    case BELYI_E_NOT_FOUND:
      return "NotFound";
    case BELYI_E_INTERNAL:
      return "Internal";
    default:
      break;
  }
  int c = static_cast<int>(code);
  if (c >= 1 && c <= static_cast<int>(ErrorCode::Timeout) + 1) return error_code_name(static_cast<ErrorCode>(c - 1));
  return "Unknown";
}

const char* belyi_last_error(void) { return g_last_error.c_str(); }

void belyi_string_free(char* s) { std::free(s); }

belyi_config belyi_config_default(void) {
  RunConfig r;
  return belyi_config{r.torsion_bound, r.closure_bound, r.series_precision, r.timeout_seconds, r.threads};
}

belyi_error belyi_corpus_load(const char* path, belyi_corpus** out) {
  if (!path || !out) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new belyi_corpus{load_corpus(path)}; });
}

belyi_error belyi_corpus_load_bundled(belyi_corpus** out) {
  if (!out) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new belyi_corpus{load_bundled_corpus()}; });
}

size_t belyi_corpus_size(const belyi_corpus* corpus) { return corpus ? corpus->entries.size() : 0; }

const char* belyi_corpus_label(const belyi_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->entries.size()) return nullptr;
  return corpus->entries[index].label.c_str();
}

void belyi_corpus_free(belyi_corpus* corpus) { delete corpus; }

belyi_error belyi_run(const belyi_corpus* corpus, const belyi_config* config, belyi_result** out) {
  if (!corpus || !out) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new belyi_result{run_pipeline(corpus->entries, to_config(config))}; });
}

belyi_summary belyi_result_summary(const belyi_result* result) {
  if (!result) return belyi_summary{};
  RunSummary s = result->run.summary();
  return belyi_summary{s.total, s.ok, s.mismatch, s.unresolved, s.timeout, s.all_torsion};
}

size_t belyi_result_size(const belyi_result* result) { return result ? result->run.entries.size() : 0; }

const char* belyi_result_label(const belyi_result* result, size_t index) {
  if (!result || index >= result->run.entries.size()) return nullptr;
  return result->run.entries[index].label.c_str();
}

belyi_status belyi_result_status(const belyi_result* result, size_t index) {
  if (!result || index >= result->run.entries.size()) return BELYI_STATUS_MISMATCH;
  return static_cast<belyi_status>(result->run.entries[index].status);
}

belyi_error belyi_result_mismatches(const belyi_result* result, size_t index, char** out) {
  if (!result || !out) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  if (index >= result->run.entries.size()) return fail(BELYI_E_NOT_FOUND, "entry index out of range");
  *out = nullptr;
  return guarded([&] {
    std::string text;
    for (const auto& m : result->run.entries[index].mismatches) text += m + "\n";
    *out = dup(text);
  });
}

belyi_error belyi_result_render(const belyi_result* result, belyi_format format, char** out) {
  if (!result || !out) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (format < BELYI_FORMAT_JSON || format > BELYI_FORMAT_TABLE) return fail(BELYI_E_INVALID_ARGUMENT, "bad format");
  return guarded([&] { *out = dup(render_run(result->run, static_cast<ReportFormat>(format))); });
}

void belyi_result_free(belyi_result* result) { delete result; }

belyi_error belyi_analyze_pair(const char* curve_json, const char* map, const belyi_config* config, char** out_json) {
  if (!curve_json || !map || !out_json) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] {
    EllipticCurve E = curve_from_json_text(curve_json);
    BelyiPair pair(E.label(), E, map);
    *out_json = dup(report_to_json(analyze(pair, to_options(to_config(config)))));
  });
}

belyi_error belyi_compose_mul(const belyi_corpus* corpus, const char* label, int m, const belyi_config* config,
                              char** out_json, int* ok) {
  if (!corpus || !label || !out_json) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  if (m < 1) return fail(BELYI_E_INVALID_ARGUMENT, "multiplier must be >= 1");
  return guarded([&] {
    BelyiPair phi = lookup(corpus, label).pair();
    MainTheoremReport r = verify_main_theorem(phi, mul_by_m(phi.curve, m), phi.label + "[" + std::to_string(m) + "]",
                                              to_options(to_config(config)));
    *out_json = dup(theorem_to_json({r}));
    if (ok) *ok = r.ok() ? 1 : 0;
  });
}

belyi_error belyi_compose_isogeny(const belyi_corpus* corpus, const char* label, const char* isogeny_json,
                                  const belyi_config* config, char** out_json, int* ok) {
  if (!corpus || !label || !isogeny_json || !out_json) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] {
    BelyiPair phi = lookup(corpus, label).pair();
    IsogenyMap psi = isogeny_from_json_text(isogeny_json);
    if (!(psi.target == phi.curve))
      throw Error(ErrorCode::CurveMismatch, "isogeny target differs from the curve of " + phi.label);
    RunConfig cfg = to_config(config);
    MainTheoremReport r = verify_main_theorem(phi, psi, phi.label + " o psi", to_options(cfg));
    std::vector<CurvePoint> samples{CurvePoint::infinity()};
    for (const auto& p : r.report.all_points()) samples.push_back(p.point);
    IsogenyCheck ic = isogeny_verify(psi, samples, cfg.series_precision);
    if (!ic.ok()) r.violations.insert(r.violations.begin(), "psi is not an isogeny: " + ic.diagnostic);
    *out_json = dup(theorem_to_json({r}));
    if (ok) *ok = r.ok() ? 1 : 0;
  });
}

belyi_error belyi_normalize(const belyi_corpus* corpus, const char* label, const belyi_config* config,
                            char** out_json, int* ok) {
  if (!corpus || !label || !out_json) return fail(BELYI_E_INVALID_ARGUMENT, "null argument");
  *out_json = nullptr;
  return guarded([&] {
    NormalizationCertificate cert = normalize(lookup(corpus, label).pair(), to_options(to_config(config)));
    *out_json = dup(certificate_to_json(cert));
    if (ok) *ok = cert.ok() ? 1 : 0;
  });
}

belyi_error belyi_family(int max_m, const belyi_config* config, char** out_entries, char** out_report, int* ok) {
  if (out_entries) *out_entries = nullptr;
  if (out_report) *out_report = nullptr;
  if (max_m < 1) return fail(BELYI_E_INVALID_ARGUMENT, "max m must be >= 1");
  return guarded([&] {
    std::vector<MainTheoremReport> reports = generate_family(max_m, to_options(to_config(config)));
    std::string entries = theorem_to_corpus_json(reports), report = theorem_to_json(reports);
    if (out_entries) *out_entries = dup(entries);
    if (out_report) *out_report = dup(report);
    if (ok) {
      *ok = 1;
      for (const auto& r : reports) *ok = *ok && r.ok();
    }
  });
}

}  // extern "C"
