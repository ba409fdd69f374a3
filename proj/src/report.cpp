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

#include "tbelyi/report.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace tbelyi {

using ojson = nlohmann::ordered_json;

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "table") return ReportFormat::Table;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "' (json, csv, table)");
}

namespace {

int fiber_point_count(const QuasiCriticalReport& r, Fiber fb) {
  auto k = static_cast<std::size_t>(fb);
  int n = static_cast<int>(r.fibers[k].size());
  for (const auto& u : r.unresolved)
    if (u.fiber == fb) n += u.factor.point_count();
  return n;
}

ojson report_object(const QuasiCriticalReport& r) {
  ojson j;
  j["label"] = r.label;
  j["degree"] = r.degree;
  ojson fibers = ojson::object();
  for (Fiber fb : kFibers) {
    ojson pts = ojson::array();
    for (const auto& p : r.fibers[static_cast<std::size_t>(fb)]) {
      ojson q;
      q["point"] = p.point.to_string();
      q["e"] = p.e;
      q["order"] = p.order ? ojson(*p.order) : ojson(nullptr);
      pts.push_back(q);
    }
    fibers[fiber_name(fb)] = pts;
  }
  j["fibers"] = fibers;
  j["fiber_sums"] = r.fiber_sums;
  ojson unresolved = ojson::array();
  for (const auto& u : r.unresolved) {
    ojson q;
    q["fiber"] = fiber_name(u.fiber);
    q["factor"] = u.factor.factor.to_string("x");
    q["multiplicity"] = u.factor.multiplicity;
    q["points_per_root"] = u.factor.points_per_root;
    unresolved.push_back(q);
  }
  j["unresolved"] = unresolved;
  j["all_torsion"] = r.all_torsion;
  j["group"] = r.group ? ojson(r.group->to_string()) : ojson(nullptr);
  j["closure_size"] = r.closure ? ojson(r.closure->size()) : ojson(nullptr);
  return j;
}

ojson entry_object(const EntryResult& e) {
  ojson j;
  if (e.report) {
    j = report_object(*e.report);
  } else {
    j["label"] = e.label;
    j["degree"] = nullptr;
    j["fibers"] = nullptr;
    j["fiber_sums"] = nullptr;
    j["unresolved"] = ojson::array();
    j["all_torsion"] = nullptr;
    j["group"] = nullptr;
    j["closure_size"] = nullptr;
  }
  j["status"] = status_name(e.status);
  j["belyi"] = e.belyi ? ojson(tri_name(*e.belyi)) : ojson(nullptr);
  if (e.decomposition) {
    ojson d;
    d["kind"] = e.decomposition->kind;
    d["verified"] = e.decomposition->verified;
    d["detail"] = e.decomposition->detail;
    j["decomposition"] = d;
  }
  j["mismatches"] = e.mismatches;
  return j;
}

std::string cell(const std::optional<QuasiCriticalReport>& r, Fiber fb) {
  return r ? std::to_string(fiber_point_count(*r, fb)) : "";
}

}  // namespace

std::string report_to_json(const QuasiCriticalReport& report) { return report_object(report).dump(2) + "\n"; }

std::string render_run(const RunResult& run, ReportFormat format) {
  RunSummary s = run.summary();
  if (format == ReportFormat::Json) {
    ojson j;
    ojson cfg;
    cfg["torsion_bound"] = run.config.torsion_bound;
    cfg["closure_bound"] = run.config.closure_bound;
    cfg["series_precision"] = run.config.series_precision;
    cfg["timeout_seconds"] = run.config.timeout_seconds;
    j["config"] = cfg;
    ojson sum;
    sum["total"] = s.total;
    sum["ok"] = s.ok;
    sum["mismatch"] = s.mismatch;
    sum["unresolved"] = s.unresolved;
    sum["timeout"] = s.timeout;
    sum["all_torsion"] = s.all_torsion;
    j["summary"] = sum;
    ojson entries = ojson::array();
    for (const auto& e : run.entries) entries.push_back(entry_object(e));
    j["entries"] = entries;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "label,degree,|B|,|W|,|F|,all_torsion,group\n";
    for (const auto& e : run.entries) {
      const auto& r = e.report;
      out << e.label << ',' << (r ? std::to_string(r->degree) : "") << ',' << cell(r, Fiber::B) << ','
          << cell(r, Fiber::W) << ',' << cell(r, Fiber::F) << ',' << (r ? (r->all_torsion ? "true" : "false") : "")
          << ',' << (r && r->group ? r->group->to_string() : "") << '\n';
    }
    return out.str();
  }
  std::size_t width = 5;
  for (const auto& e : run.entries) width = std::max(width, e.label.size());
  auto row = [&](const std::string& label, const std::string& status, const std::string& deg, const std::string& b,
                 const std::string& w, const std::string& f, const std::string& tors, const std::string& group) {
    out << std::left << std::setw(static_cast<int>(width)) << label << "  " << std::setw(10) << status << std::right
        << std::setw(6) << deg << std::setw(5) << b << std::setw(5) << w << std::setw(5) << f << "  " << std::left
        << std::setw(13) << tors << group << '\n';
  };
  row("label", "status", "deg", "|B|", "|W|", "|F|", "all_torsion", "group");
  for (const auto& e : run.entries) {
    const auto& r = e.report;
    row(e.label, status_name(e.status), r ? std::to_string(r->degree) : "-", r ? cell(r, Fiber::B) : "-",
        r ? cell(r, Fiber::W) : "-", r ? cell(r, Fiber::F) : "-",
        r ? (r->all_torsion ? "yes" : "no") : "-", r && r->group ? r->group->to_string() : "-");
  }
  for (const auto& e : run.entries) {
    if (!e.report) continue;
    out << '\n' << e.label << '\n';
    for (Fiber fb : kFibers) {
      for (const auto& p : e.report->fibers[static_cast<std::size_t>(fb)]) {
        out << "  " << fiber_name(fb) << "  " << p.point.to_string() << "  e=" << p.e
            << "  order=" << (p.order ? std::to_string(*p.order) : "?") << '\n';
      }
    }
    for (const auto& u : e.report->unresolved) {
      out << "  " << fiber_name(u.fiber) << "  over " << u.factor.factor.to_string("x") << " = 0  e*deg="
          << u.factor.order_sum() << '\n';
    }
    for (const auto& m : e.mismatches) out << "  mismatch: " << m << '\n';
  }
  out << "\ntotal " << s.total << ", ok " << s.ok << ", mismatch " << s.mismatch << ", unresolved " << s.unresolved
      << ", timeout " << s.timeout << ", all torsion " << s.all_torsion << '\n';
  return out.str();
}

std::string theorem_to_json(const std::vector<MainTheoremReport>& reports) {
  ojson arr = ojson::array();
  for (const auto& r : reports) {
    ojson j;
    j["label"] = r.report.label;
    j["expected_degree"] = r.expected_degree;
    j["belyi"] = tri_name(r.belyi);
    j["degree_ok"] = r.degree_ok;
    j["torsion_ok"] = r.torsion_ok;
    j["group_ok"] = r.group_ok;
    j["maps_into_base"] = r.maps_into_base;
    j["unramified"] = r.unramified;
    j["violations"] = r.violations;
    j["report"] = report_object(r.report);
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

std::string certificate_to_json(const NormalizationCertificate& cert) {
  ojson j;
  j["label"] = cert.label;
  j["N"] = cert.sums.degree;
  j["Q0"] = cert.sums.common.to_string();
  ojson sums, checks;
  for (Fiber fb : kFibers) {
    sums[fiber_name(fb)] = cert.sums.fiber_sums[static_cast<std::size_t>(fb)].to_string();
    if (cert.translate) checks[fiber_name(fb)] = cert.principal[static_cast<std::size_t>(fb)];
  }
  j["fiber_sums"] = sums;
  j["P0"] = cert.translate ? ojson(cert.translate->to_string()) : ojson(nullptr);
  j["normalized_map"] = cert.normalized_map ? ojson(cert.normalized_map->to_string()) : ojson(nullptr);
  j["divisor_checks"] = cert.translate ? checks : ojson(nullptr);
  j["ok"] = cert.ok();
  if (!cert.note.empty()) j["note"] = cert.note;
  return j.dump(2) + "\n";
}

std::string theorem_to_corpus_json(const std::vector<MainTheoremReport>& reports) {
  ojson arr = ojson::array();
  for (const auto& r : reports) {
    if (!r.pair) continue;
    const EllipticCurve& E = r.pair->curve;
    ojson curve;
    curve["a1"] = E.a1().to_string();
    curve["a2"] = E.a2().to_string();
    curve["a3"] = E.a3().to_string();
    curve["a4"] = E.a4().to_string();
    curve["a6"] = E.a6().to_string();
    curve["label"] = E.label();
    ojson expected;
    if (r.report.unresolved.empty()) expected["ram_indices"] = r.report.ram_multiset();
    if (r.report.group) expected["group"] = r.report.group->to_string();
    expected["all_torsion"] = r.report.all_torsion;
    ojson j;
    j["label"] = r.pair->label;
    j["curve"] = curve;
    j["map"] = r.pair->map.to_string();
    j["expected"] = expected;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    if (!std::cout) throw Error(ErrorCode::IoError, "cannot write to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path);
}

}  // namespace tbelyi
