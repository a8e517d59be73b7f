#pragma once

#include <cstdint>
#include <vector>

namespace synlab {

// Regular multigraph with an explicit neighbor-slot table; loops and
// parallel edges are kept, so adjacency counts stay symmetric and every
// vertex owns exactly `degree` slots.
struct ExpanderGraph {
  std::uint32_t n_vertices = 0;
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> slots;  // slots[v * degree + s]
  std::uint32_t side = 0;            // grid side for margulis graphs, else 0

  std::uint32_t neighbor(std::uint32_t v, std::uint32_t slot) const {
    return slots[static_cast<std::size_t>(v) * degree + slot];
  }
};

// The 8-regular graph on Z_n x Z_n. Vertex (x, y) has id x*n + y and its
// slots, in order, are
//   (x+2y, y) (x-2y, y) (x+2y+1, y) (x-2y-1, y)
//   (x, y+2x) (x, y-2x) (x, y+2x+1) (x, y-2x-1)
// with all arithmetic mod n. Second-largest walk eigenvalue is at most
// 5*sqrt(2)/8.
ExpanderGraph margulis(std::uint32_t n);

inline constexpr double kMargulisLambdaBound = 0.88388347648318440550;  // 5*sqrt(2)/8

struct SpectralOptions {
  std::uint32_t dense_cap = 10'000;     // vertices; above this, power iteration
  std::uint32_t max_iterations = 200'000;
  double tolerance = 1e-3;              // iterative mode
};

struct SpectralResult {
  double lambda = 0.0;  // |second-largest eigenvalue| of the walk matrix
  bool dense = false;
  std::uint32_t iterations = 0;
  double residual = 0.0;
};

// Dense symmetric eigendecomposition up to the cap (tolerance ~1e-6), power
// iteration with the uniform eigenvector deflated beyond it.
SpectralResult spectral_lambda(const ExpanderGraph& g, const SpectralOptions& opt = {});

using BitSeq = std::vector<std::uint8_t>;

struct WalkSample {
  std::vector<std::uint32_t> vertices;  // X_1 .. X_k
  std::uint64_t bits_consumed = 0;
};

// Bits needed for a k-vertex walk sample: ceil(log2 n) start bits plus 3 per
// step.
std::uint64_t walk_bits_needed(const ExpanderGraph& g, std::uint32_t k);

// Deterministic function of the seed bits: the start vertex is the first
// ceil(log2 n) bits read MSB-first and reduced mod n, each further step takes
// the neighbor slot named by the next 3 bits. Requires an 8-regular graph.
WalkSample walk(const ExpanderGraph& g, const BitSeq& seed_bits, std::uint32_t k);

struct AmplificationReport {
  std::uint32_t n_vertices = 0;
  std::uint32_t k = 0;
  double beta = 0.0;       // |bad set| / n
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;  // walks entirely inside the bad set
  double empirical = 0.0;
  double bound = 0.0;      // ((1-lambda)*sqrt(beta)+lambda)^(k-1), lambda = 5*sqrt(2)/8
  double ci_low = 0.0;     // 95% normal-approximation interval
  double ci_high = 0.0;
  double start_bias = 0.0; // per-vertex probability gap of the start decoding
};

double amplification_bound(double beta, std::uint32_t k);

// Monte Carlo estimate of Pr[X_1..X_k all inside the bad set] with per-trial
// derived seeds; deterministic given (seed, trials).
AmplificationReport amplification_experiment(const ExpanderGraph& g,
                                             const std::vector<std::uint32_t>& bad_set,
                                             std::uint32_t k, std::uint64_t trials,
                                             std::uint64_t seed);

}  // namespace synlab
