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

#ifndef QPBC_LP_H
#define QPBC_LP_H

#include <cstdint>
#include <string>
#include <vector>

namespace qpbc {

/// min c^T x subject to A x = b, x >= 0, with A stored column-wise (sparse).
struct LpProblem {
    size_t rows = 0;
    std::vector<double> b;
    std::vector<double> cost;
    // Compressed sparse columns.
    std::vector<size_t> col_start{0};
    std::vector<uint32_t> row_index;
    std::vector<double> value;

    size_t cols() const {
        return cost.size();
    }
    /// Appends a column given as (row, value) pairs.
    void add_column(double c, const std::vector<std::pair<uint32_t, double>> &entries);
};

enum class LpStatus { Optimal, Infeasible, IterationLimit };

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    std::vector<double> x;
    double objective = 0;
    size_t iterations = 0;
    double residual = 0;  // max |A x - b|
};

/// Pluggable LP back end.
class LpSolver {
   public:
    virtual ~LpSolver() = default;
    virtual LpSolution solve(const LpProblem &problem) = 0;
    virtual std::string name() const = 0;
};

struct SimplexOptions {
    double tolerance = 1e-9;
    size_t refactor_interval = 64;
    size_t max_iterations = 2000000;
    /// Relative size of the random right-hand-side perturbation used against
    /// degenerate cycling; 0 disables it.
    double perturbation = 1e-9;
    uint64_t seed = 12345;
};

/// Two-phase revised simplex: dense LU of the basis with product-form eta
/// updates, Dantzig pricing, and Bland's rule after long degenerate stalls.
class RevisedSimplex : public LpSolver {
   public:
    explicit RevisedSimplex(SimplexOptions options = {}) : options_(options) {
    }
    LpSolution solve(const LpProblem &problem) override;
    std::string name() const override {
        return "revised-simplex";
    }

   private:
    SimplexOptions options_;
};

struct InteriorPointOptions {
    double tolerance = 1e-10;  // relative primal, dual and gap tolerance
    size_t max_iterations = 200;
};

/// Mehrotra predictor-corrector interior point method on the normal equations
/// (dense Cholesky of A D A^T). Requires A to have full row rank.
class InteriorPoint : public LpSolver {
   public:
    explicit InteriorPoint(InteriorPointOptions options = {}) : options_(options) {
    }
    LpSolution solve(const LpProblem &problem) override;
    std::string name() const override {
        return "interior-point";
    }

   private:
    InteriorPointOptions options_;
};

}  // namespace qpbc

#endif
