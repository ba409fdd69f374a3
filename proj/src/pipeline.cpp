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

#include "tbelyi/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace tbelyi {

void RunConfig::validate() const {
  if (torsion_bound < 1 || closure_bound < 1 || series_precision < 4)
    throw Error(ErrorCode::InvalidArgument, "bounds must be >= 1 and the series precision >= 4");
  if (!(timeout_seconds >= 0)) throw Error(ErrorCode::InvalidArgument, "timeout must be nonnegative");
  if (threads < 0) throw Error(ErrorCode::InvalidArgument, "thread count must be nonnegative");
}

const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::Ok:
      return "ok";
    case EntryStatus::Mismatch:
      return "mismatch";
    case EntryStatus::Unresolved:
      return "unresolved";
    case EntryStatus::Timeout:
      return "timeout";
  }
  return "?";
}

RunSummary RunResult::summary() const {
  RunSummary s;
  s.total = static_cast<int>(entries.size());
  for (const auto& e : entries) {
    switch (e.status) {
      case EntryStatus::Ok:
        ++s.ok;
        break;
      case EntryStatus::Mismatch:
        ++s.mismatch;
        break;
      case EntryStatus::Unresolved:
        ++s.unresolved;
        break;
      case EntryStatus::Timeout:
        ++s.timeout;
        break;
    }
    if (e.report && e.report->all_torsion) ++s.all_torsion;
  }
  return s;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

std::string join_points(const std::set<CurvePoint>& s) {
  std::string out;
  for (const auto& P : s) out += (out.empty() ? "" : ", ") + P.to_string();
  return out;
}

void compare_expected(const CorpusEntry& entry, const QuasiCriticalReport& r, std::vector<std::string>& out) {
  const Expectation& ex = entry.expected;
  if (ex.ram_indices) {
    std::vector<int> got = r.ram_multiset();
    if (!r.unresolved.empty()) {
      out.push_back("ramification: fibers have unresolved points, expected " + join_ints(*ex.ram_indices));
    } else if (got != *ex.ram_indices) {
      out.push_back("ramification: expected " + join_ints(*ex.ram_indices) + ", got " + join_ints(got));
    }
  }
  if (ex.points) {
    std::set<CurvePoint> want(ex.points->begin(), ex.points->end()), got;
    for (const auto& p : r.all_points()) got.insert(p.point);
    std::set<CurvePoint> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::inserter(missing, missing.end()));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::inserter(extra, extra.end()));
    if (!missing.empty()) out.push_back("points: missing " + join_points(missing));
    if (!extra.empty()) out.push_back("points: unexpected " + join_points(extra));
  }
  if (ex.group) {
    std::string got = r.group ? r.group->to_string() : "none";
    if (!r.group || !(*r.group == *ex.group))
      out.push_back("group: expected " + ex.group->to_string() + ", got " + got);
  }
  if (ex.all_torsion && *ex.all_torsion != r.all_torsion) {
    out.push_back(std::string("all_torsion: expected ") + (*ex.all_torsion ? "true" : "false") + ", got " +
                  (r.all_torsion ? "true" : "false"));
  }
}

DecompositionResult check_decomposition(const CorpusEntry& entry, const BelyiPair& pair,
                                        const QuasiCriticalReport& report, int precision) {
  const Decomposition& d = *entry.decomposition;
  DecompositionResult out;
  if (d.gamma) {
    out.kind = "dynamical";
    OneVarMap gamma = OneVarMap::parse(*d.gamma);
    CurveFunction phi = CurveFunction::parse(d.phi, pair.curve);
    DecompositionCheck c = decompose_verify(pair.map, gamma, phi);
    out.verified = c.ok();
    out.detail = std::string("gamma dynamical: ") + (c.dynamical ? "yes" : "no") +
                 "; gamma o phi = beta: " + (c.composes ? "yes" : "no");
    return out;
  }
  out.kind = "isogeny";
  const IsogenyMap& psi = *d.psi;
  CurveFunction phi = CurveFunction::parse(d.phi, psi.target);
  std::vector<CurvePoint> samples{CurvePoint::infinity()};
  for (const auto& p : report.all_points()) samples.push_back(p.point);
  bool same_source = psi.source == pair.curve;
  IsogenyCheck ic = same_source ? isogeny_verify(psi, samples, precision) : IsogenyCheck{};
  bool composes = same_source && compose_map(phi, psi) == pair.map;
  out.verified = ic.ok() && composes;
  out.detail = std::string("isogeny: ") + (ic.ok() ? "yes" : "no (" + (same_source ? ic.diagnostic : "wrong source") + ")") +
               "; phi o psi = beta: " + (composes ? "yes" : "no");
  return out;
}

}  // namespace

EntryResult run_entry(const CorpusEntry& entry, const RunConfig& config) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto checkpoint = [&] {
    std::chrono::duration<double> elapsed = clock::now() - start;
    if (elapsed.count() >= config.timeout_seconds)
      throw Error(ErrorCode::Timeout, entry.label + " exceeded " + std::to_string(config.timeout_seconds) + " s");
  };
  EntryResult r;
  r.label = entry.label;
  try {
    checkpoint();
    BelyiPair pair = entry.pair();
    AnalysisOptions opts{config.torsion_bound, config.closure_bound, config.series_precision, checkpoint};
    r.report = analyze(pair, opts);
    const QuasiCriticalReport& rep = *r.report;
    if (rep.fiber_sums[0] != rep.fiber_sums[1] || rep.fiber_sums[0] != rep.fiber_sums[2])
      r.mismatches.push_back("fiber sums differ: " + join_ints({rep.fiber_sums.begin(), rep.fiber_sums.end()}));
    checkpoint();
    BelyiCheck bc = is_belyi(pair, config.series_precision);
    r.belyi = bc.result;
    if (bc.result == Tri::False)
      r.mismatches.push_back("not Belyi: critical value " + bc.offending_value->to_string() + " at " +
                             bc.offending_point->to_string());
    compare_expected(entry, rep, r.mismatches);
    if (entry.decomposition) {
      checkpoint();
      r.decomposition = check_decomposition(entry, pair, rep, config.series_precision);
      if (!r.decomposition->verified) r.mismatches.push_back("decomposition: " + r.decomposition->detail);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Timeout) {
      r.status = EntryStatus::Timeout;
      r.report.reset();
      r.belyi.reset();
      r.decomposition.reset();
      r.mismatches.clear();
      return r;
    }
    r.mismatches.push_back(std::string("error: ") + e.what());
  }
  if (!r.mismatches.empty()) {
    r.status = EntryStatus::Mismatch;
  } else if ((r.report && !r.report->unresolved.empty()) || r.belyi == Tri::Unknown) {
    r.status = EntryStatus::Unresolved;
  } else {
    r.status = EntryStatus::Ok;
  }
  return r;
}

RunResult run_pipeline(const std::vector<CorpusEntry>& entries, const RunConfig& config) {
  config.validate();
  RunResult out;
  out.config = config;
  out.entries.resize(entries.size());
  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) out.entries[i] = run_entry(entries[i], config);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const EntryResult& a, const EntryResult& b) { return a.label < b.label; });
  return out;
}

}  // namespace tbelyi
