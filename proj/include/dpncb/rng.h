// Copyright 2026 The dpncb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPNCB_RNG_H_
#define DPNCB_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>

namespace dpncb {

// A deterministic random stream identified by (master_seed, stream_id).
//
// The engine is std::mt19937_64 seeded through std::seed_seq with the four
// 32-bit halves of the two identifiers, so equal identifiers always give
// equal sequences and every simulated run can be replayed from its pair.
// Satisfies UniformRandomBitGenerator, so it can drive <random>
// distributions directly.
//
// A stream is a value: copying it forks the sequence at the current
// position. It must not be shared between concurrent consumers.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  // Uniform on the open interval (0, 1) with 53 bits of resolution. Exactly
  // one engine draw.
  double uniform_open01();

  // Uniform on {0, ..., n-1} by 128-bit multiply-shift. Exactly one engine
  // draw. n must be positive.
  std::size_t uniform_index(std::size_t n);

  // A child stream for a sub-purpose (environment, policy, privatizer...).
  // Depends only on this stream's identifiers and `purpose`, never on how
  // many draws have been consumed.
  RngStream fork(std::uint64_t purpose) const;

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

// The stream for run `run_index` under `master_seed`.
RngStream derive_stream(std::uint64_t master_seed, std::uint64_t run_index);

// SplitMix64 finalizer; used for identifier mixing (fork ids, cell hashes).
std::uint64_t mix64(std::uint64_t x);

}  // namespace dpncb

#endif  // DPNCB_RNG_H_
