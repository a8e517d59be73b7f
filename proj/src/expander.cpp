#include "synlab/expander.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "synlab/errors.hpp"
#include "synlab/rng.hpp"

namespace synlab {

namespace {

std::uint32_t ceil_log2(std::uint64_t v) {
  std::uint32_t bits = 0;
  while ((std::uint64_t{1} << bits) < v) ++bits;
  return bits;
}

}  // namespace

ExpanderGraph margulis(std::uint32_t n) {
  if (n < 2) throw ValidationError("margulis graph needs side length >= 2");
  ExpanderGraph g;
  g.side = n;
  g.n_vertices = n * n;
  g.degree = 8;
  g.slots.resize(static_cast<std::size_t>(g.n_vertices) * 8);

  auto add = [n](std::uint32_t a, std::uint64_t b) {
    return static_cast<std::uint32_t>((a + b) % n);
  };
  auto sub = [n](std::uint32_t a, std::uint64_t b) {
    return static_cast<std::uint32_t>((a + static_cast<std::uint64_t>(n) * n - b % n) % n);
  };
  auto id = [n](std::uint32_t x, std::uint32_t y) { return x * n + y; };

  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint32_t* s = &g.slots[static_cast<std::size_t>(id(x, y)) * 8];
      // Slot order is frozen so walks are replayable: + before - in each pair.
      s[0] = id(add(x, 2ull * y), y);
      s[1] = id(sub(x, 2ull * y), y);
      s[2] = id(add(x, 2ull * y + 1), y);
      s[3] = id(sub(x, 2ull * y + 1), y);
      s[4] = id(x, add(y, 2ull * x));
      s[5] = id(x, sub(y, 2ull * x));
      s[6] = id(x, add(y, 2ull * x + 1));
      s[7] = id(x, sub(y, 2ull * x + 1));
    }
  }
  return g;
}

namespace {

void check_graph(const ExpanderGraph& g) {
  if (g.n_vertices == 0 || g.degree == 0) throw ValidationError("empty graph");
  if (g.slots.size() != static_cast<std::size_t>(g.n_vertices) * g.degree)
    throw ValidationError("slot table size does not match n_vertices * degree");
  for (std::uint32_t t : g.slots)
    if (t >= g.n_vertices) throw ValidationError("slot target out of range");
}

// y = W x where W is the walk matrix (adjacency with multiplicity / degree).
void walk_multiply(const ExpanderGraph& g, const std::vector<double>& x,
                   std::vector<double>& y) {
  const double inv_d = 1.0 / g.degree;
  for (std::uint32_t v = 0; v < g.n_vertices; ++v) {
    double acc = 0.0;
    const std::uint32_t* s = &g.slots[static_cast<std::size_t>(v) * g.degree];
    for (std::uint32_t j = 0; j < g.degree; ++j) acc += x[s[j]];
    y[v] = acc * inv_d;
  }
}

SpectralResult dense_lambda(const ExpanderGraph& g) {
  const std::uint32_t n = g.n_vertices;
  Eigen::MatrixXd walk = Eigen::MatrixXd::Zero(n, n);
  const double inv_d = 1.0 / g.degree;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t j = 0; j < g.degree; ++j) walk(v, g.neighbor(v, j)) += inv_d;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(walk, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw PropertyViolation("dense eigendecomposition failed");

  std::vector<double> magnitudes(n);
  for (std::uint32_t i = 0; i < n; ++i) magnitudes[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<double>());

  SpectralResult result;
  result.dense = true;
  result.lambda = n >= 2 ? magnitudes[1] : 0.0;
  return result;
}

SpectralResult iterative_lambda(const ExpanderGraph& g, const SpectralOptions& opt) {
  const std::uint32_t n = g.n_vertices;
  std::vector<double> x(n), y(n);

  SplitMix64 rng(0x5eed5eed5eed5eedull);
  for (double& v : x) v = static_cast<double>(rng.next() >> 11) / 9007199254740992.0 - 0.5;

  auto deflate = [&](std::vector<double>& v) {
    double mean = 0.0;
    for (double e : v) mean += e;
    mean /= n;
    for (double& e : v) e -= mean;
  };
  auto norm = [&](const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return std::sqrt(s);
  };

  deflate(x);
  double nx = norm(x);
  if (nx == 0.0) x[0] = 1.0, x[1 % n] = -1.0, nx = std::sqrt(2.0);
  for (double& e : x) e /= nx;

  SpectralResult result;
  double prev = -1.0;
  for (std::uint32_t it = 1; it <= opt.max_iterations; ++it) {
    walk_multiply(g, x, y);
    deflate(y);  // keep roundoff from re-introducing the uniform eigenvector
    double ny = norm(y);
    result.iterations = it;
    result.residual = std::abs(ny - prev);
    if (ny == 0.0) {
      result.lambda = 0.0;  // start vector lay in the kernel: spectrum is {1, 0}
      return result;
    }
    for (std::uint32_t v = 0; v < n; ++v) x[v] = y[v] / ny;
    // |lambda_2| is the growth rate of the deflated iterate; with a negative
    // second eigenvalue the estimate still converges through the norm. The
    // norm sequence converges much slower than its increments shrink, so the
    // stop threshold sits four orders below the accuracy target.
    if (it > 16 && std::abs(ny - prev) < opt.tolerance * 1e-4) {
      result.lambda = ny;
      return result;
    }
    prev = ny;
  }
  throw CapacityError("power iteration did not converge within " +
                      std::to_string(opt.max_iterations) +
                      " iterations; residual " + std::to_string(result.residual));
}

}  // namespace

SpectralResult spectral_lambda(const ExpanderGraph& g, const SpectralOptions& opt) {
  check_graph(g);
  if (g.n_vertices <= opt.dense_cap) return dense_lambda(g);
  return iterative_lambda(g, opt);
}

std::uint64_t walk_bits_needed(const ExpanderGraph& g, std::uint32_t k) {
  return ceil_log2(g.n_vertices) + 3ull * (k - 1);
}

WalkSample walk(const ExpanderGraph& g, const BitSeq& seed_bits, std::uint32_t k) {
  check_graph(g);
  if (k < 1) throw ValidationError("walk needs k >= 1 vertices");
  if (g.degree != 8)
    throw ValidationError("walk steps consume 3 bits and need an 8-regular graph");
  const std::uint64_t needed = walk_bits_needed(g, k);
  if (seed_bits.size() < needed)
    throw ValidationError("walk needs " + std::to_string(needed) + " seed bits, got " +
                          std::to_string(seed_bits.size()));

  std::size_t pos = 0;
  auto take = [&](std::uint32_t count) {
    std::uint64_t v = 0;
    for (std::uint32_t i = 0; i < count; ++i) v = (v << 1) | (seed_bits[pos++] & 1);
    return v;
  };

  WalkSample sample;
  sample.vertices.reserve(k);
  // Start vertex: interpret the start bits as an integer, reduce mod n.
  const std::uint32_t start_bits = ceil_log2(g.n_vertices);
  sample.vertices.push_back(static_cast<std::uint32_t>(take(start_bits) % g.n_vertices));
  for (std::uint32_t i = 1; i < k; ++i) {
    std::uint32_t slot = static_cast<std::uint32_t>(take(3));
    sample.vertices.push_back(g.neighbor(sample.vertices.back(), slot));
  }
  sample.bits_consumed = pos;
  return sample;
}

double amplification_bound(double beta, std::uint32_t k) {
  const double lambda = kMargulisLambdaBound;
  return std::pow((1.0 - lambda) * std::sqrt(beta) + lambda, k - 1);
}

AmplificationReport amplification_experiment(const ExpanderGraph& g,
                                             const std::vector<std::uint32_t>& bad_set,
                                             std::uint32_t k, std::uint64_t trials,
                                             std::uint64_t seed) {
  check_graph(g);
  if (k < 1) throw ValidationError("k must be >= 1");
  if (trials < 1) throw ValidationError("trials must be >= 1");

  std::vector<char> bad(g.n_vertices, 0);
  std::uint32_t bad_count = 0;
  for (std::uint32_t v : bad_set) {
    if (v >= g.n_vertices) throw ValidationError("bad-set vertex out of range");
    if (!bad[v]) {
      bad[v] = 1;
      ++bad_count;
    }
  }
  if (bad_count == g.n_vertices)
    throw ValidationError("bad set must be a proper subset of the vertices");

  const std::uint64_t bits_needed = walk_bits_needed(g, k);
  std::uint64_t hits = 0;
  BitSeq bits(bits_needed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, trial));
    std::uint64_t word = 0;
    std::uint32_t left = 0;
    for (std::uint64_t i = 0; i < bits_needed; ++i) {
      if (left == 0) {
        word = rng.next();
        left = 64;
      }
      bits[i] = static_cast<std::uint8_t>(word >> 63);
      word <<= 1;
      --left;
    }
    WalkSample sample = walk(g, bits, k);
    bool all_bad = true;
    for (std::uint32_t v : sample.vertices) {
      if (!bad[v]) {
        all_bad = false;
        break;
      }
    }
    if (all_bad) ++hits;
  }

  AmplificationReport report;
  report.n_vertices = g.n_vertices;
  report.k = k;
  report.beta = static_cast<double>(bad_count) / g.n_vertices;
  report.trials = trials;
  report.hits = hits;
  report.empirical = static_cast<double>(hits) / static_cast<double>(trials);
  report.bound = amplification_bound(report.beta, k);
  const double se =
      std::sqrt(report.empirical * (1.0 - report.empirical) / static_cast<double>(trials));
  report.ci_low = std::max(0.0, report.empirical - 1.96 * se);
  report.ci_high = std::min(1.0, report.empirical + 1.96 * se);

  // The start vertex is a modular reduction of ceil(log2 n) bits, so some
  // vertices are hit by one extra bit pattern.
  const std::uint32_t b = ceil_log2(g.n_vertices);
  const std::uint64_t space = std::uint64_t{1} << b;
  report.start_bias = space % g.n_vertices == 0 ? 0.0 : 1.0 / static_cast<double>(space);
  return report;
}

}  // namespace synlab
