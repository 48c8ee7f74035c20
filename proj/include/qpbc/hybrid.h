// Copyright 2026 The qpbc Authors
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

#ifndef QPBC_HYBRID_H
#define QPBC_HYBRID_H

#include <functional>
#include <memory>
#include <vector>

#include "qpbc/clifford.h"
#include "qpbc/compiler.h"
#include "qpbc/magic_analysis.h"

namespace qpbc {

/// |T_v><T_v|^{k} = sum_j c_j |phi_j><phi_j| with |phi_j> = C_j |0...0>.
struct Decomposition {
    uint32_t p = 3;
    size_t k = 0;
    MagicParams params;
    std::vector<double> coefficients;  // nonzero only
    std::vector<StabilizerStateDesc> states;
    std::vector<std::vector<CliffordGate>> preparations;
    double l1 = 0;

    /// Sampling weights |c_j| / l1.
    std::vector<double> weights() const;
};

enum class DecompositionMode {
    Optimal,  // solve the RoM program
    Cached,   // reuse an earlier result for the same (p, k, params) in this process
};

/// k = 0 gives the single empty state with coefficient 1.
Decomposition decompose_magic(uint32_t p, size_t k, const MagicParams &params,
                              DecompositionMode mode = DecompositionMode::Optimal, const RomOptions &options = {});

/// 1/p + l1 sign (p [m = 0] - 1) / p.
double eta(uint32_t m, int sign, double l1, uint32_t p);

/// Half-width of the eta range: l1 (p - 1) / p, or l1^2 (p - 1) / p for the
/// wider printed interval.
double eta_half_range(double l1, uint32_t p, bool conservative = false);

/// Hoeffding sample count for accuracy eps with failure probability q_fail.
uint64_t plan_samples(double eps, double q_fail, double l1, uint32_t p, bool conservative = false);

/// Hoeffding half-width reached after n samples.
double hoeffding_half_width(uint64_t n, double q_fail, double l1, uint32_t p, bool conservative = false);

/// A standard PBC: observables on t magic qudits (all |T_v>, same params)
/// measured in order. q0 is the probability that the last outcome is 0.
struct HybridProgram {
    uint32_t p = 3;
    size_t t = 0;
    MagicParams params;
    std::vector<PauliObservable> observables;
};

/// Dense reference value of q0.
double exact_q0(const HybridProgram &program);

/// Dense distribution over all outcome tuples of the program.
Distribution program_distribution(const HybridProgram &program);

using BackendFactory = std::function<std::unique_ptr<MagicBackend>(uint32_t p, const std::vector<MagicParams> &magic)>;

struct HybridOptions {
    uint64_t samples = 0;
    uint64_t seed = 0;
    size_t workers = 1;
    double q_fail = 0.05;
    bool conservative_range = false;
    /// Exact expectation over every (j, branch) pair instead of sampling.
    bool exhaustive = false;
    /// DenseBackend when empty.
    BackendFactory backend;
};

struct HybridReport {
    uint32_t p = 3;
    size_t t = 0;
    size_t k = 0;
    double l1 = 1;
    uint64_t samples = 0;
    double q0_hat = 0;
    double half_width = 0;
    uint64_t seed = 0;
    size_t max_backend_qudits = 0;  // widest standard PBC handed to the backend
};

/// The session program for decomposition term j: C_j on the first k wires
/// (now stabilizer wires), the remaining t - k wires magic.
SessionProgram reduced_program(const HybridProgram &program, const Decomposition &d, size_t j);

/// Estimates q0 with the first k magic qudits replaced by sampled stabilizer
/// states. Sample i draws from its own stream derived from (seed, i), so the
/// result does not depend on the worker count.
HybridReport hybrid_estimate(const HybridProgram &program, const Decomposition &d, const HybridOptions &options);

}  // namespace qpbc

#endif
