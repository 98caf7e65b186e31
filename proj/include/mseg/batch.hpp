#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mseg/functorial.hpp"
#include "mseg/segment.hpp"

namespace mseg {

/// Random ladders: for every d and every s in [s_min, s_max], `count` shapes.
struct Sweep {
  std::string orbit;
  std::vector<int> degrees;
  int s_min = 1;
  int s_max = 1;
  int count = 1;
  int span = 8;        // begins are drawn from [0, span + s)
  int max_extra = 3;   // segment lengths exceed the ladder minimum by at most this
  std::uint64_t seed = 1;
};

/// A fixed shape evaluated for every listed degree.
struct ShapeJob {
  std::string orbit;
  std::vector<int> degrees;
  std::vector<std::pair<int, int>> shape;
};

/// Config file, one declaration per line ('#' comments):
///   orbit <name> kind=<I|II> k=<int>
///   sweep orbit=<name> d=<p>[,<p>...] s=<lo>..<hi> count=<n> [span=<n>] [extra=<n>] [seed=<n>]
///   shape orbit=<name> d=<p>[,<p>...] {[a,b],...}
struct BatchConfig {
  std::vector<OrbitDatum> orbits;
  std::vector<Sweep> sweeps;
  std::vector<ShapeJob> shapes;
};

struct BatchRow {
  int s = 0;
  int d = 0;
  std::string shape;       // canonical text of the target multisegment
  std::string shape_hash;  // FNV-1a 64 of `shape`, hex
  std::optional<std::int64_t> r;  // nullopt when the target has no model
  std::uint64_t fiber_size = 0;
  std::optional<std::uint64_t> d_count;
};

BatchConfig parse_batch_config(std::string_view text);

/// Evaluates every job; `seed_offset` is added to every sweep seed.
std::vector<BatchRow> run_batch(const BatchConfig& config, std::uint64_t seed_offset = 0);

/// Header `s,d,shape_hash,r,fiber_size,d_count,log_d_ratio`.
void write_csv(std::ostream& out, std::span<const BatchRow> rows);

std::string fnv1a_hex(std::string_view text);

/// A random ladder with `s` segments; strictly decreasing begins and ends.
template <typename Rng>
std::vector<std::pair<int, int>> random_ladder_shape(Rng& rng, int s, int span, int max_extra) {
  std::vector<int> begins;
  std::vector<int> pool(static_cast<std::size_t>(span + s));
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  begins.assign(pool.begin(), pool.begin() + s);
  std::sort(begins.begin(), begins.end());  // ascending: bottom of the ladder first
  std::uniform_int_distribution<int> extra(0, max_extra);
  std::vector<std::pair<int, int>> out;
  int prev_end = begins.empty() ? 0 : begins.front() - 1;
  for (int a : begins) {
    const int b = std::max(a, prev_end + 1) + extra(rng);
    out.emplace_back(a, b);
    prev_end = b;
  }
  return out;
}

}  // namespace mseg
