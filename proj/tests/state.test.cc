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

#include "cvtele/state.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "cvtele/errors.hpp"

using namespace cvtele;

TEST(StateSpec, fock_is_unit_vector) {
    auto s = StateSpec::fock(3);
    const auto* v = s.as_fock_vector();
    ASSERT_NE(v, nullptr);
    ASSERT_EQ(v->coeffs.size(), 4u);
    ASSERT_EQ(v->coeffs[3], Complex(1.0, 0.0));
    ASSERT_EQ(s.fock_number(), 3);
    ASSERT_FALSE(s.is_superposition01());
    ASSERT_EQ(s.cutoff(), 4);
}

TEST(StateSpec, superposition01) {
    auto s = StateSpec::superposition01();
    const auto& c = s.as_fock_vector()->coeffs;
    ASSERT_NEAR(c[0].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(c[1].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_TRUE(s.is_superposition01());
    ASSERT_FALSE(s.fock_number().has_value());
    ASSERT_NEAR(std::abs(s.mean_amplitude() - Complex(0.5, 0.0)), 0.0, 1e-15);
}

TEST(StateSpec, global_phase_is_recognised) {
    Complex ph = std::polar(1.0, 0.7);
    auto s = StateSpec::fock_vector({ph / std::sqrt(2.0), ph / std::sqrt(2.0)});
    ASSERT_TRUE(s.is_superposition01());
    auto f = StateSpec::fock_vector({0.0, 0.0, Complex(0.0, 1.0)});
    ASSERT_EQ(f.fock_number(), 2);
}

TEST(StateSpec, coherent) {
    auto s = StateSpec::coherent({0.5, -0.25});
    ASSERT_TRUE(s.is_coherent());
    ASSERT_EQ(s.as_coherent()->alpha, Complex(0.5, -0.25));
    ASSERT_EQ(s.mean_amplitude(), Complex(0.5, -0.25));
    ASSERT_EQ(s.cutoff(), 0);
}

TEST(StateSpec, validation) {
    ASSERT_THROW(StateSpec::fock(-1), DomainError);
    ASSERT_THROW(StateSpec::fock(kMaxFockIndex + 1), DomainError);
    ASSERT_NO_THROW(StateSpec::fock(kMaxFockIndex));
    ASSERT_THROW(StateSpec::fock_vector({1.0, 1.0}), DomainError);
    ASSERT_THROW(StateSpec::fock_vector({}), DomainError);
    ASSERT_THROW(StateSpec::normalized({0.0, 0.0}), DomainError);
    ASSERT_THROW(StateSpec::normalized(std::vector<Complex>(kMaxFockIndex + 2, 1.0)), DomainError);
}

TEST(StateSpec, normalized_reports_input_norm) {
    double norm = 0.0;
    auto s = StateSpec::normalized({3.0, Complex(0.0, 4.0)}, &norm);
    ASSERT_NEAR(norm, 5.0, 1e-15);
    ASSERT_NEAR(std::abs(s.as_fock_vector()->coeffs[1] - Complex(0.0, 0.8)), 0.0, 1e-15);
}

TEST(StateSpec, mean_amplitude_of_vector) {
    // <a> = sum sqrt(n) c_{n-1}^* c_n
    auto s = StateSpec::normalized({1.0, Complex(0.0, 1.0), 1.0});
    Complex want = (std::conj(Complex(1.0)) * Complex(0.0, 1.0) +
                    std::sqrt(2.0) * std::conj(Complex(0.0, 1.0)) * 1.0) / 3.0;
    ASSERT_NEAR(std::abs(s.mean_amplitude() - want), 0.0, 1e-15);
}

TEST(StateSpec, descriptor) {
    ASSERT_EQ(StateSpec::coherent({0.5, -0.25}).descriptor(), "coh:0.5,-0.25");
    ASSERT_EQ(StateSpec::fock(1).descriptor(), "fock:1");
    ASSERT_EQ(StateSpec::superposition01().descriptor(), "superpos01");
}
