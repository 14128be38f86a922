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

// Exhaustive checks of the splitting theorems over an enumerated corpus.
// Each check returns a report; observational findings go into its notes and
// never change the verdict. Failure records carry the offending matroid as a
// matroid file plus a params string, and replay_failure reruns that case.

#ifndef BINMAT_VERIFY_HPP_
#define BINMAT_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/enumerate.hpp"
#include "binmat/matroid.hpp"
#include "binmat/minor.hpp"
#include "binmat/report.hpp"

namespace binmat {

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Y with |Y| = k and an M(F) minor inside splitting(S, Y).
struct GfkWitness {
  std::vector<std::string> y;
  MinorWitness witness;
};

// Tries every k-subset Y in increasing bitmask order. Throws VerifyError
// unless 1 <= k <= |E(S)|.
std::optional<GfkWitness> gf_k_membership(const BinaryMatroid& s,
                                          std::size_t k);
bool verify_gfk_witness(const BinaryMatroid& s, const GfkWitness& w);

// Quotient properties: at most two loops, no 2-element
// cocircuit, no parallel class above 4. Returns the violated ones.
std::vector<std::string> quotient_property_violations(const BinaryMatroid& q);

VerificationReport check_gf_k_empty(const Corpus& corpus, std::size_t k,
                                    std::size_t jobs = 1);
VerificationReport check_theorem_4_3(const Corpus& corpus, std::size_t k = 3,
                                     std::size_t jobs = 1);
VerificationReport enumerate_quotients_of_F();
VerificationReport check_theorem_1_5(const Corpus& corpus,
                                     std::size_t jobs = 1);
VerificationReport check_main_theorem(const Corpus& corpus,
                                      std::size_t jobs = 1);
VerificationReport check_element_splitting_identities(const Corpus& corpus,
                                                      std::size_t jobs = 1);
// Compares both readings of the alternative 3-fold with three_fold.
// Always observational.
VerificationReport check_ghafari_agreement(const Corpus& corpus,
                                           std::size_t jobs = 1);
// Duality exchange, circuit/cocircuit parity, splitting rank law,
// element-splitting identities and minor-closure of the gammoid test.
VerificationReport check_structural_properties(
    const std::vector<BinaryMatroid>& matroids, std::size_t jobs = 1);

// Reruns one failure record of the named check. True when the failure
// reproduces.
bool replay_failure(std::string_view check, const FailureRecord& failure);

}  // namespace binmat

#endif  // BINMAT_VERIFY_HPP_
