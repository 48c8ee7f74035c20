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

#ifndef QPBC_STATEVECTOR_H
#define QPBC_STATEVECTOR_H

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "qpbc/circuit.h"
#include "qpbc/clifford.h"
#include "qpbc/emitter.h"
#include "qpbc/gadget.h"
#include "qpbc/pauli.h"

namespace qpbc {

/// Dense state vector over p^n amplitudes; qudit 0 is the most significant
/// digit of the basis index.
class DenseState {
   public:
    /// |0...0>. Throws OracleTooLarge past oracle_limit().
    DenseState(uint32_t p, size_t n);
    DenseState(uint32_t p, size_t n, Eigen::VectorXcd amplitudes);

    uint32_t p() const noexcept {
        return p_;
    }
    size_t n() const noexcept {
        return n_;
    }
    size_t dim() const noexcept {
        return static_cast<size_t>(amps_.size());
    }
    const Eigen::VectorXcd &amplitudes() const noexcept {
        return amps_;
    }
    Eigen::VectorXcd &amplitudes() noexcept {
        return amps_;
    }

    /// Digit of qudit q in basis index `index`.
    uint32_t digit(size_t index, size_t q) const;
    size_t stride(size_t q) const;

    void apply(const CliffordGate &g);
    void apply_uv(size_t q, const MagicParams &params);
    void apply_uv_dagger(size_t q, const MagicParams &params);
    /// C_sigma = U_v X^{-sigma} U_v^dagger.
    void apply_correction(size_t q, const MagicParams &params, uint32_t sigma);
    void apply_pauli(const PauliObservable &pauli);
    /// Applies a p x p matrix to qudit q.
    void apply_local(size_t q, const Eigen::MatrixXcd &u);

    /// Probability of each Z outcome on qudit q.
    std::vector<double> z_probabilities(size_t q) const;
    /// Projects qudit q onto |value> and renormalizes; returns the probability.
    double collapse_z(size_t q, uint32_t value);

    double norm() const {
        return amps_.norm();
    }
    void normalize();
    /// |<this|other>|^2 (no normalization applied).
    double fidelity(const DenseState &other) const;
    DenseState tensor(const DenseState &other) const;

   private:
    uint32_t p_;
    size_t n_;
    Eigen::VectorXcd amps_;
    std::vector<size_t> strides_;
};

/// U_v F |0> = U_v |+>.
DenseState magic_state(uint32_t p, const MagicParams &params);

/// p x p matrices of the gate kinds at power 1.
Eigen::MatrixXcd fourier_matrix(uint32_t p);
Eigen::MatrixXcd phase_gate_matrix(uint32_t p);
Eigen::MatrixXcd uv_matrix(uint32_t p, const MagicParams &params);

struct ProjectorResult {
    double probability;
    DenseState post;  // normalized when probability > 1e-12
};

/// P_(M, sigma) = (1/p) sum_k omega^{-k sigma} M^k.
ProjectorResult measure_projector(const DenseState &state, const PauliObservable &m, uint32_t sigma);

/// Probabilities of every sigma for M.
std::vector<double> outcome_probabilities(const DenseState &state, const PauliObservable &m);

using Distribution = std::map<std::vector<uint32_t>, double>;

double total_variation(const Distribution &a, const Distribution &b);

/// Outcome distribution of the measured qudits in program order.
Distribution distribution(const CircuitIR &c);

/// Final-measurement distribution of a gadgetized circuit (all sigma branches).
Distribution distribution(const GadgetizedCircuit &g);

/// Distribution of the classical outputs of an adaptive circuit.
Distribution distribution(const AdaptiveCircuit &c);

struct GadgetBranch {
    double probability;
    std::vector<uint32_t> mid_outcomes;
    std::vector<uint32_t> final_outcomes;
    DenseState state;
};

/// Every branch of a gadgetized circuit whose data wires start in `data_input`
/// (magic wires in |T_v>).
std::vector<GadgetBranch> gadget_branches(const GadgetizedCircuit &g, const DenseState &data_input);

struct AdaptiveBranch {
    double probability;
    std::vector<uint32_t> record;   // measurement outcomes by id
    std::vector<uint32_t> outputs;  // classical outputs
    DenseState state;
};

/// Start state of an adaptive circuit: |0> everywhere except magic inputs.
DenseState adaptive_initial_state(const AdaptiveCircuit &c);

/// Every branch of an adaptive circuit from the given initial state.
std::vector<AdaptiveBranch> adaptive_branches(const AdaptiveCircuit &c, const DenseState &initial);

}  // namespace qpbc

#endif
