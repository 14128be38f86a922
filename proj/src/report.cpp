// Copyright 2026 The Authors.
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

#include "binmat/report.hpp"

#include <iomanip>
#include <sstream>

namespace binmat {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kObservational:
      return "observational";
  }
  return "unknown";
}

namespace {

void indent_block(std::ostringstream& os, const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) os << "      " << line << "\n";
}

}  // namespace

std::string format_report(const VerificationReport& r) {
  std::ostringstream os;
  os << "check:    " << r.check << "\n"
     << "universe: " << r.universe << "\n"
     << "cases:    " << r.cases << "\n"
     << "failures: " << r.failures.size() << "\n"
     << "time:     " << std::fixed << std::setprecision(3)
     << r.wall_time.count() << " s\n"
     << "verdict:  " << verdict_name(r.verdict()) << "\n";
  for (const auto& [k, v] : r.observations) {
    os << "  " << k << ": " << v << "\n";
  }
  std::size_t i = 0;
  for (const auto& f : r.failures) {
    os << "  failure " << ++i << ": " << f.params << "\n"
       << "    expected: " << f.expected << "\n"
       << "    got:      " << f.got << "\n"
       << "    input:\n";
    indent_block(os, f.input);
  }
  return os.str();
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["universe"] = r.universe;
  j["cases"] = r.cases;
  j["verdict"] = verdict_name(r.verdict());
  j["wall_time_s"] = r.wall_time.count();
  j["observations"] = nlohmann::json::array();
  for (const auto& [k, v] : r.observations) {
    j["observations"].push_back({{"key", k}, {"value", v}});
  }
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"input", f.input},
                             {"params", f.params},
                             {"expected", f.expected},
                             {"got", f.got}});
  }
  return j;
}

}  // namespace binmat
