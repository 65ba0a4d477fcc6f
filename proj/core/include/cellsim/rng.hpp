// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace cellsim {

/// splitmix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Order-sensitive combination of two identifiers into one stream id.
std::uint64_t combine_ids(std::uint64_t a, std::uint64_t b) noexcept;

/// A reproducible random stream identified by (master_seed, stream_id).
///
/// The generator is xoshiro256** seeded through splitmix64. Integer output is
/// identical on every platform; uniform and exponential conversions are done
/// here rather than through <random> distributions, whose algorithms are
/// implementation defined. Streams are cheap to copy and are not shared
/// between threads.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept;

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Uniform on (0, 1]; safe to pass to log().
  double uniform_positive() noexcept;

  /// Unit-mean exponential, i.e. the power of a unit Rayleigh fading tap.
  double exponential() noexcept;

  /// Independent child stream keyed by \p key. Does not advance this stream.
  RngStream substream(std::uint64_t key) const noexcept;

  // UniformRandomBitGenerator interface, so std::shuffle and friends work.
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next_u64(); }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace cellsim
