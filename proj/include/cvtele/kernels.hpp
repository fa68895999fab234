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

#ifndef CVTELE_KERNELS_HPP
#define CVTELE_KERNELS_HPP

#include <omp.h>

#include <cmath>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "cvtele/numerics.hpp"

// Data-parallel inner loops. Every kernel has a serial reference path and an
// OpenMP path; both partition work identically and reduce in a fixed order,
// so their results are bit-identical for any worker count.
namespace cvtele::kernels {

enum class Execution { Serial, Parallel };

struct ExecConfig {
    Execution mode = Execution::Parallel;
    // Thread count for the parallel path; 0 uses the OpenMP default.
    int workers = 0;

    int threads() const { return workers > 0 ? workers : omp_get_max_threads(); }

    static ExecConfig serial() { return {Execution::Serial, 1}; }
    static ExecConfig parallel(int workers = 0) { return {Execution::Parallel, workers}; }
};

/// Calls fn(i) for i in [0, n). fn must only write to slot-private state.
/// The first exception (lowest index) is rethrown after the loop.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, const ExecConfig& exec) {
    if (exec.mode == Execution::Serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec.threads())
    for (long long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

/// Returns {fn(0), ..., fn(n - 1)} in index order.
template <class Acc, class Fn>
std::vector<Acc> map_blocks(std::size_t n, Fn&& fn, const ExecConfig& exec) {
    std::vector<Acc> out(n);
    for_each_index(n, [&](std::size_t i) { out[i] = fn(i); }, exec);
    return out;
}

/// sum_i sum_j a_i b_j exp(-coef |x_i - y_j|^2). Rows are summed left to
/// right, then row totals in index order.
double gaussian_pair_sum(std::span<const Complex> x, std::span<const double> a,
                         std::span<const Complex> y, std::span<const double> b, double coef,
                         const ExecConfig& exec);

/// out[i] = f(points[i]).
void evaluate_on_points(std::span<const Complex> points, const std::function<double(Complex)>& f,
                        std::span<double> out, const ExecConfig& exec);

/// min_i f(points[i]) together with its index (lowest index on ties).
struct GridMinimum {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
};
GridMinimum grid_min(std::span<const Complex> points, const std::function<double(Complex)>& f,
                     const ExecConfig& exec);

/// Running mean/variance (Welford) with an exact pairwise merge.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0.0) {
            return;
        }
        if (count == 0.0) {
            *this = o;
            return;
        }
        double n = count + o.count;
        double d = o.mean - mean;
        mean += d * o.count / n;
        m2 += o.m2 + d * d * count * o.count / n;
        count = n;
    }

    /// Unbiased sample variance.
    double variance() const { return count > 1.0 ? m2 / (count - 1.0) : 0.0; }
    double stderr_of_mean() const { return count > 1.0 ? std::sqrt(variance() / count) : 0.0; }
};

}  // namespace cvtele::kernels

#endif
