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

#include <cstdlib>
#include <string>

#include "binmat/kernels/histogram_orbit.hpp"

namespace binmat::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if (defined(__x86_64__) || defined(_M_X64)) && \
    (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
    if (backend_available(b)) out.push_back(b);
  }
  return out;
}

namespace {

Backend select_backend() {
  if (const char* env = std::getenv("BINMAT_KERNEL")) {
    const std::string want(env);
    for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
      if (want == backend_name(b)) {
        return backend_available(b) ? b : Backend::kScalar;
      }
    }
  }
  if (backend_available(Backend::kAvx2)) return Backend::kAvx2;
  if (backend_available(Backend::kNeon)) return Backend::kNeon;
  return Backend::kScalar;
}

}  // namespace

Backend active_backend() {
  static const Backend chosen = select_backend();
  return chosen;
}

Histogram16 max_shuffle(const Histogram16& hist,
                        std::span<const Shuffle16> perms, Backend backend) {
  switch (backend) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::kAvx2:
      if (backend_available(Backend::kAvx2)) return max_shuffle_avx2(hist, perms);
      break;
#endif
#if defined(__aarch64__)
    case Backend::kNeon:
      return max_shuffle_neon(hist, perms);
#endif
    default:
      break;
  }
  return max_shuffle_scalar(hist, perms);
}

Histogram16 max_shuffle(const Histogram16& hist,
                        std::span<const Shuffle16> perms) {
  return max_shuffle(hist, perms, active_backend());
}

}  // namespace binmat::kernels
