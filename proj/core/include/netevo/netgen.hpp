// Copyright 2026 The netevo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "netevo/graph.hpp"

namespace netevo {

enum class GenModel {
  barabasi_albert,
  erdos_renyi,
  scale_free,
  complete,
};

/// Meaning of model_param per model:
///   barabasi_albert  attachments per new node m, integer in [1, n)
///   erdos_renyi      edge probability p in [0, 1]
///   scale_free       target mean neighbor count, in [2, n)
///   complete         unused
struct GenSpec {
  GenModel model = GenModel::barabasi_albert;
  int nodes = 2;
  double model_param = 0.0;
  uint64_t seed = 0;
};

/// Generates the model's undirected skeleton, then assigns each edge a
/// direction by fair coin flip and a sign by an independent fair coin
/// flip. All weights have magnitude 1.0. Deterministic for a fixed GenSpec.
SignedDigraph generate(const GenSpec& spec);

/// Re-draws every edge's direction and sign by fair coin flips, keeping
/// the undirected skeleton and the weight magnitudes. Deterministic per
/// seed.
SignedDigraph randomize_signs_directions(const SignedDigraph& g, uint64_t seed);

const char* to_string(GenModel m);

/// Accepts the CLI spellings: ba, er, scalefree, complete.
GenModel parse_gen_model(const std::string& name);

/// Default model_param used when the caller does not override it
/// (ba: 3, er: 0.2, scalefree: 3.2). These are tuning constants of this
/// implementation, chosen to hit the documented connectivity targets at
/// n = 2000.
double default_model_param(GenModel m);

}  // namespace netevo
