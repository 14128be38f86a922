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

#ifndef BINMAT_REPORT_HPP_
#define BINMAT_REPORT_HPP_

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace binmat {

enum class Verdict { kPass, kFail, kObservational };

std::string_view verdict_name(Verdict v);

// One failing case. `input` is a matroid file, so the case can be replayed.
struct FailureRecord {
  std::string input;
  std::string params;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string check;
  std::string universe;
  std::size_t cases = 0;
  std::vector<FailureRecord> failures;
  // Ordered key/value findings that never affect the verdict.
  std::vector<std::pair<std::string, std::string>> observations;
  std::chrono::duration<double> wall_time{0};
  bool observational = false;

  Verdict verdict() const {
    if (observational) return Verdict::kObservational;
    return failures.empty() ? Verdict::kPass : Verdict::kFail;
  }
  bool passed() const { return verdict() != Verdict::kFail; }

  void note(std::string key, std::string value) {
    observations.emplace_back(std::move(key), std::move(value));
  }
};

std::string format_report(const VerificationReport& r);
nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace binmat

#endif  // BINMAT_REPORT_HPP_
