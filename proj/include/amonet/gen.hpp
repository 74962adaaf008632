// Copyright 2026 The Amonet Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amonet/cnf.hpp"
#include "amonet/detect.hpp"

namespace amonet {

/// Parameters of a random mutex formula: N variables in ceil(N/D) contiguous
/// blocks of D (the last possibly shorter), plus each of the N(N-1)/2
/// possible mutexes independently with probability p. With hidden=false a
/// block contributes the disjunction of its variables; with hidden=true it
/// contributes a planted clique of mutexes instead, added after the random
/// ones.
struct MutexNetParams {
  int num_vars = 0;       // N
  int block_size = 0;     // D
  double mutex_prob = 0;  // p
  std::uint64_t seed = 0;
  bool hidden = false;
};

struct GeneratedInstance {
  CnfFormula formula;
  std::vector<std::vector<int>> hidden_cliques;  // empty unless hidden
  std::vector<std::string> comments;             // provenance, for DIMACS
};

/// Deterministic: (params, seed) fix the instance bit-exactly. Random
/// mutexes are drawn in lexicographic pair order, one PRNG draw per pair;
/// with hidden=true the planted clique edges follow block by block in
/// lexicographic order, skipping pairs the random phase already produced.
GeneratedInstance gen_mutex_net(const MutexNetParams& params);

/// K+1 pigeons into K holes, direct encoding: variable (i-1)*K + j says
/// pigeon i sits in hole j. One disjunction per pigeon, then per hole the
/// full mutex clique over its K+1 variables. Unsatisfiable for every K.
CnfFormula gen_pigeonhole(int holes);

inline int pigeonhole_var(int pigeon, int hole, int holes) {
  return (pigeon - 1) * holes + hole;
}

/// Fraction of hidden cliques contained in some cluster (supersets count).
/// An empty hidden list scores 1.0 vacuously.
double recovery_score(const CliqueClustering& clustering,
                      const std::vector<std::vector<int>>& hidden);

}  // namespace amonet
