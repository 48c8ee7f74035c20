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

#ifndef QPBC_MAGIC_ANALYSIS_H
#define QPBC_MAGIC_ANALYSIS_H

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "qpbc/circuit.h"
#include "qpbc/lp.h"
#include "qpbc/stabilizer_states.h"

namespace qpbc {

/// U_v applied to |+>. Throws NotMagic when gamma' = 0.
Eigen::VectorXcd magic_state_vector(uint32_t p, const MagicParams &params);

/// Tensor power of a vector.
Eigen::VectorXcd tensor_power(const Eigen::VectorXcd &v, size_t copies);

/// Tr(X(x) Z(z) rho) for every (x, z), indexed by x_index * p^n + z_index
/// where x_index reads x as a base-p number with qudit 0 most significant.
std::vector<std::complex<double>> pauli_expectations(uint32_t p, const Eigen::MatrixXcd &rho);
std::vector<std::complex<double>> pauli_expectations(uint32_t p, const Eigen::VectorXcd &psi);

/// Number of qudits n with p^n == dim; throws ShapeError otherwise.
size_t qudit_count(uint32_t p, size_t dim);

struct RomResult {
    double value = 0;
    std::vector<double> coefficients;  // one per enumerated state
    double residual = 0;               // max |A c - b| of the LP
    size_t iterations = 0;
};

struct RomOptions {
    uint64_t enumeration_limit = kDefaultEnumerationLimit;
    /// Directory holding enumeration caches; empty disables caching.
    std::string cache_dir;
    /// LP back end; InteriorPoint when null.
    std::shared_ptr<LpSolver> solver;
};

/// Enumeration for (p, n), read from or written to the cache when configured.
std::vector<StabilizerStateDesc> stabilizer_basis(uint32_t p, size_t n, const RomOptions &options = {});

/// min sum |c_j| subject to rho = sum c_j |s_j><s_j| over the given basis.
/// Throws NumericalFailure if the LP does not reach an optimum.
RomResult rom(const Eigen::MatrixXcd &rho, const std::vector<StabilizerStateDesc> &basis,
              const RomOptions &options = {});

/// RoM of |T_v>^{copies}.
RomResult rom_of_magic(uint32_t p, size_t copies, const MagicParams &params, const RomOptions &options = {});

/// p^{-n} sum_P |Tr(P rho)| over phase-1 Paulis.
double st_norm(uint32_t p, const Eigen::MatrixXcd &rho);

/// Stabilizer alpha-Renyi entropy
///   (1 / (1 - alpha)) log_p sum_P Xi_P^alpha - n,   Xi_P = p^{-n} |<psi|P|psi>|^2.
/// Throws NormalizationError for non-unit input and ShapeError for alpha = 1
/// or alpha < 0.
double renyi_entropy(const Eigen::VectorXcd &psi, double alpha, uint32_t p);

struct BoundReport {
    uint32_t p = 3;
    size_t copies = 1;
    double rom = 0;
    double rom_upper_exponent = 0;    // log_p R(|T_v>^{copies})^{2 / copies}
    double renyi_lower_exponent = 0;  // M_{(1/2, p)}(|T_v>)
};

BoundReport bound_report(uint32_t p, size_t copies, const MagicParams &params, const RomOptions &options = {});

}  // namespace qpbc

#endif
