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

#ifndef BINMAT_SPLIT_OPS_HPP_
#define BINMAT_SPLIT_OPS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

class SplitError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

// Appends the row with ones exactly on `t`. Ground set unchanged.
BinaryMatroid splitting(const BinaryMatroid& m, ElementSet t);
BinaryMatroid splitting(const BinaryMatroid& m,
                        const std::vector<std::string>& t);

// Splitting plus a new element whose column is one only in the new row.
BinaryMatroid element_splitting(const BinaryMatroid& m, ElementSet t,
                                const std::string& new_label);
BinaryMatroid element_splitting(const BinaryMatroid& m,
                                const std::vector<std::string>& t,
                                const std::string& new_label);

struct ThreeFoldParams {
  std::string x;
  std::string y;
  std::string p = "p";
  std::string q = "q";
  std::string r = "r";
};

// The intermediate matrices of the construction: M with three loops
// appended, its splitting on {x,y,p,r}, then the splitting on {x,q,r}.
struct ThreeFoldStages {
  BinaryMatroid with_loops;
  BinaryMatroid first_split;
  BinaryMatroid result;
};

// True iff `t` is a proper subset of some cocircuit.
bool in_larger_cocircuit(const BinaryMatroid& m, ElementSet t);

// Throws SplitError when {x,y} is not a proper subset of any cocircuit or
// the new labels collide. Column order: original labels, then p, q, r.
ThreeFoldStages three_fold_stages(const BinaryMatroid& m,
                                  const ThreeFoldParams& params);
BinaryMatroid three_fold(const BinaryMatroid& m, const ThreeFoldParams& params);

// How the second step of the element-splitting based 3-fold is read.
enum class SecondStep {
  kElementSplit,  // element split on T' adding q
  kPlainSplit,    // plain split on T', then q appended as a loop
};

// Element split on T adding p, second step on T', then r = p + q.
BinaryMatroid three_fold_ghafari(const BinaryMatroid& m, ElementSet t,
                                 ElementSet t_prime, SecondStep mode,
                                 const ThreeFoldParams& labels = {});

// All pairs {x, y} (x < y) lying in some cocircuit of size >= 3.
std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(
    const BinaryMatroid& m);

}  // namespace binmat

#endif  // BINMAT_SPLIT_OPS_HPP_
