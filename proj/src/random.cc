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

#include "cvtele/random.hpp"

#include <cmath>

namespace cvtele::numerics {
namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

StreamKey derive_stream(StreamKey parent, std::uint64_t child) {
    return {parent.seed, mix64(parent.stream_id ^ mix64(child + 0x632BE59BD9B4E019ULL))};
}

RandomStream::RandomStream(StreamKey key)
    : key_(key), base_(mix64(key.seed ^ mix64(key.stream_id + 0x9E3779B97F4A7C15ULL))) {}

std::pair<double, double> gaussian_pair(RandomStream& stream) {
    constexpr double kTwoPi = 6.28318530717958647692;
    double u1 = stream.uniform();
    double u2 = stream.uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = kTwoPi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace cvtele::numerics
