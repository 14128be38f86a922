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

#include "binmat/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace binmat {

MatroidProfile::MatroidProfile(const Gf2Matrix& rep)
    : size(rep.cols()),
      rank(binmat::rank(rep)),
      circuit_sizes(rep.cols() + 1, 0),
      element_degrees(rep.cols(), std::vector<std::uint32_t>(rep.cols() + 1, 0)) {
  BitRow nonzero = 0;
  for (BitRow r : rep.row_words()) nonzero |= r;
  loop_count = size - static_cast<std::size_t>(std::popcount(nonzero));
  circuits = null_space_min_supports(rep);
  for (BitRow c : circuits) {
    const auto k = static_cast<std::size_t>(std::popcount(c));
    ++circuit_sizes[k];
    for (BitRow b = c; b != 0; b &= b - 1) {
      ++element_degrees[static_cast<std::size_t>(std::countr_zero(b))][k];
    }
  }
}

bool MatroidProfile::compatible(const MatroidProfile& other) const {
  if (size != other.size || rank != other.rank ||
      loop_count != other.loop_count || circuit_sizes != other.circuit_sizes) {
    return false;
  }
  auto a = element_degrees;
  auto b = other.element_degrees;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

IsomorphismMatcher::IsomorphismMatcher(const BinaryMatroid& source)
    : profile_(source) {}

namespace {

class Search {
 public:
  Search(const MatroidProfile& src, const MatroidProfile& dst,
         std::span<const IndexPin> pins,
         const std::function<bool(const ElementMap&)>& visit)
      : src_(src), dst_(dst), visit_(visit) {
    const std::size_t n = src.size;
    forced_.assign(n, kNone);
    for (const auto& p : pins) {
      if (p.from >= n || p.to >= n) {
        ok_ = false;
        return;
      }
      if (forced_[p.from] != kNone && forced_[p.from] != p.to) {
        ok_ = false;
        return;
      }
      forced_[p.from] = p.to;
    }
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (src.element_degrees[i] != dst.element_degrees[j]) continue;
        if (forced_[i] != kNone && forced_[i] != j) continue;
        candidates_[i].push_back(j);
      }
      if (candidates_[i].empty()) {
        ok_ = false;
        return;
      }
    }
    // Most constrained first; ties broken by index for determinism.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return candidates_[a].size() < candidates_[b].size();
                     });
    // A circuit becomes checkable once its last element (in search order)
    // has been assigned.
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[order_[k]] = k;
    completes_.resize(n);
    for (BitRow c : src.circuits) {
      std::size_t last = 0;
      for (BitRow b = c; b != 0; b &= b - 1) {
        last = std::max(last,
                        position[static_cast<std::size_t>(std::countr_zero(b))]);
      }
      completes_[last].push_back(c);
    }
    dst_circuits_ = dst.circuits;
    std::sort(dst_circuits_.begin(), dst_circuits_.end());
    map_.assign(n, kNone);
  }

  void run() {
    if (ok_) recurse(0);
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool recurse(std::size_t depth) {
    if (depth == order_.size()) return visit_(map_);
    const std::size_t e = order_[depth];
    for (std::size_t t : candidates_[e]) {
      if (used_ & (BitRow{1} << t)) continue;
      map_[e] = t;
      used_ |= BitRow{1} << t;
      if (circuits_hold(depth) && !recurse(depth + 1)) return false;
      used_ &= ~(BitRow{1} << t);
      map_[e] = kNone;
    }
    return true;
  }

  bool circuits_hold(std::size_t depth) const {
    for (BitRow c : completes_[depth]) {
      BitRow image = 0;
      for (BitRow b = c; b != 0; b &= b - 1) {
        image |= BitRow{1} << map_[static_cast<std::size_t>(std::countr_zero(b))];
      }
      if (!std::binary_search(dst_circuits_.begin(), dst_circuits_.end(),
                              image)) {
        return false;
      }
    }
    return true;
  }

  const MatroidProfile& src_;
  const MatroidProfile& dst_;
  const std::function<bool(const ElementMap&)>& visit_;
  bool ok_ = true;
  std::vector<std::size_t> forced_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<BitRow>> completes_;
  std::vector<BitRow> dst_circuits_;
  ElementMap map_;
  BitRow used_ = 0;
};

}  // namespace

void IsomorphismMatcher::for_each(
    const MatroidProfile& target,
    const std::function<bool(const ElementMap&)>& visit) const {
  if (!profile_.compatible(target)) return;
  Search(profile_, target, {}, visit).run();
}

std::optional<ElementMap> IsomorphismMatcher::match(
    const MatroidProfile& target, std::span<const IndexPin> pins) const {
  if (!profile_.compatible(target)) return std::nullopt;
  std::optional<ElementMap> found;
  const std::function<bool(const ElementMap&)> visit =
      [&found](const ElementMap& m) {
        found = m;
        return false;
      };
  Search(profile_, target, pins, visit).run();
  return found;
}

std::optional<ElementMap> IsomorphismMatcher::match(
    const BinaryMatroid& target, std::span<const IndexPin> pins) const {
  if (target.size() != profile_.size) return std::nullopt;
  return match(MatroidProfile(target), pins);
}

std::optional<ElementMap> find_isomorphism(const BinaryMatroid& a,
                                           const BinaryMatroid& b,
                                           std::span<const IndexPin> pins) {
  if (a.size() != b.size()) return std::nullopt;
  return IsomorphismMatcher(a).match(b, pins);
}

std::vector<ElementMap> all_isomorphisms(const BinaryMatroid& a,
                                         const BinaryMatroid& b) {
  std::vector<ElementMap> out;
  if (a.size() != b.size()) return out;
  IsomorphismMatcher(a).for_each(MatroidProfile(b), [&out](const ElementMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace binmat
