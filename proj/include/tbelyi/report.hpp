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

#ifndef TBELYI_REPORT_HPP
#define TBELYI_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tbelyi/normalize.hpp"
#include "tbelyi/pipeline.hpp"

namespace tbelyi {

enum class ReportFormat { Json, Csv, Table };
ReportFormat parse_format(std::string_view name);

/// All renderers are deterministic: same input, same bytes.
std::string render_run(const RunResult& run, ReportFormat format);
std::string report_to_json(const QuasiCriticalReport& report);
std::string theorem_to_json(const std::vector<MainTheoremReport>& reports);
std::string certificate_to_json(const NormalizationCertificate& cert);

/// Composed pairs as corpus entries; expectations come from the resolved analysis.
std::string theorem_to_corpus_json(const std::vector<MainTheoremReport>& reports);

/// Writes text to path, or to stdout when path is empty or "-". Throws IoError.
void write_output(const std::string& path, const std::string& text);

}  // namespace tbelyi

#endif
