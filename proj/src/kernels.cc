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

#include "cvtele/kernels.hpp"

#include <stdexcept>

namespace cvtele::kernels {
namespace {

double pair_row(Complex xi, double ai, std::span<const Complex> y, std::span<const double> b,
                double coef) {
    double row = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        row += b[j] * std::exp(-coef * std::norm(xi - y[j]));
    }
    return ai * row;
}

}  // namespace

double gaussian_pair_sum(std::span<const Complex> x, std::span<const double> a,
                         std::span<const Complex> y, std::span<const double> b, double coef,
                         const ExecConfig& exec) {
    if (x.size() != a.size() || y.size() != b.size()) {
        throw std::invalid_argument("gaussian_pair_sum: node and weight lengths differ");
    }
    std::vector<double> rows(x.size(), 0.0);
    if (exec.mode == Execution::Serial) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            rows[i] = pair_row(x[i], a[i], y, b, coef);
        }
    } else {
        const long long n = static_cast<long long>(x.size());
#pragma omp parallel for schedule(static) num_threads(exec.threads())
        for (long long i = 0; i < n; ++i) {
            rows[i] = pair_row(x[i], a[i], y, b, coef);
        }
    }
    double total = 0.0;
    for (double r : rows) {
        total += r;
    }
    return total;
}

void evaluate_on_points(std::span<const Complex> points, const std::function<double(Complex)>& f,
                        std::span<double> out, const ExecConfig& exec) {
    if (points.size() != out.size()) {
        throw std::invalid_argument("evaluate_on_points: output length differs from point count");
    }
    // Chunked so the exception bookkeeping in for_each_index stays small.
    constexpr std::size_t kChunk = 256;
    const std::size_t chunks = (points.size() + kChunk - 1) / kChunk;
    for_each_index(
        chunks,
        [&](std::size_t c) {
            std::size_t end = std::min(points.size(), (c + 1) * kChunk);
            for (std::size_t i = c * kChunk; i < end; ++i) {
                out[i] = f(points[i]);
            }
        },
        exec);
}

GridMinimum grid_min(std::span<const Complex> points, const std::function<double(Complex)>& f,
                     const ExecConfig& exec) {
    std::vector<double> values(points.size());
    evaluate_on_points(points, f, values, exec);
    GridMinimum best;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < best.value) {
            best.value = values[i];
            best.index = i;
        }
    }
    return best;
}

}  // namespace cvtele::kernels
