// Copyright 2026 The lgsim Authors
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

#ifndef LGSIM_CHECKS_HPP
#define LGSIM_CHECKS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace lgsim {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// The worst observed value of the checked quantity (violation margin,
    /// max deviation, or count, depending on the check).
    double worst = 0.0;
    std::string detail;
};

struct CheckOptions {
    std::size_t grid_steps = 181;  // per angle over [0, pi]
    std::size_t epsilon_steps = 11;  // 0, 0.1, ..., 1
    std::size_t mc_repetitions = 100;
    std::size_t mc_samples = 1000000;
};

/// Evaluates the whole (theta1, theta2, epsilon) grid once and checks every
/// invariant the simulator promises against it.
std::vector<CheckResult> run_invariant_suite(const CheckOptions &options = {});

}  // namespace lgsim

#endif
