// Copyright 2026 The cvtele Authors
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

#ifndef CVTELE_RANDOM_HPP
#define CVTELE_RANDOM_HPP

#include <cstdint>
#include <utility>

namespace cvtele::numerics {

struct StreamKey {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    bool operator==(const StreamKey&) const = default;
};

/// Key for the `child`-th substream of `parent`. Used to give every sample
/// block its own stream independent of how blocks are scheduled.
StreamKey derive_stream(StreamKey parent, std::uint64_t child);

/// Counter-based generator: draw i is mix(key + i * gamma), so the whole
/// sequence is a pure function of (seed, stream_id, draw index).
class RandomStream {
   public:
    explicit RandomStream(StreamKey key);

    std::uint64_t next_u64() {
        std::uint64_t z = base_ + (++counter_) * kGamma;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    std::uint64_t draws() const { return counter_; }
    StreamKey key() const { return key_; }

   private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    StreamKey key_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

/// Two independent standard normal deviates (Box-Muller).
std::pair<double, double> gaussian_pair(RandomStream& stream);

}  // namespace cvtele::numerics

#endif
