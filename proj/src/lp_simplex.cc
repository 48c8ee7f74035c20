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

#include "qpbc/lp.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "qpbc/errors.h"

namespace qpbc {

void LpProblem::add_column(double c, const std::vector<std::pair<uint32_t, double>> &entries) {
    cost.push_back(c);
    for (const auto &[r, v] : entries) {
        if (r >= rows) {
            throw IndexError("LP column entry row " + std::to_string(r) + " out of range");
        }
        row_index.push_back(r);
        value.push_back(v);
    }
    col_start.push_back(row_index.size());
}

namespace {

struct Eta {
    size_t row;
    Eigen::VectorXd column;  // the transformation column
};

class SimplexRun {
   public:
    SimplexRun(const LpProblem &lp, const SimplexOptions &opt) : lp_(lp), opt_(opt), m_(lp.rows), n_(lp.cols()) {
        if (lp.b.size() != m_) {
            throw ShapeError("LP right-hand side has the wrong length");
        }
        sign_.assign(m_, 1.0);
        b_ = Eigen::VectorXd(m_);
        for (size_t i = 0; i < m_; i++) {
            sign_[i] = lp.b[i] < 0 ? -1.0 : 1.0;
            b_(i) = sign_[i] * lp.b[i];
        }
        b_work_ = b_;
        if (opt.perturbation > 0) {
            std::mt19937_64 rng(opt.seed);
            std::uniform_real_distribution<double> u(0.5, 1.0);
            for (size_t i = 0; i < m_; i++) {
                b_work_(i) += opt.perturbation * (1.0 + std::abs(b_(i))) * u(rng);
            }
        }
        basis_.resize(m_);
        pos_.assign(n_ + m_, -1);
        for (size_t i = 0; i < m_; i++) {
            basis_[i] = n_ + i;
            pos_[n_ + i] = static_cast<long>(i);
        }
    }

    LpSolution run() {
        LpSolution sol;
        refactor();
        // Phase 1: minimize the sum of artificials.
        if (!iterate(true, sol.iterations)) {
            sol.status = LpStatus::IterationLimit;
            return sol;
        }
        double infeasibility = 0;
        for (size_t i = 0; i < m_; i++) {
            if (basis_[i] >= n_) {
                infeasibility += xb_(i);
            }
        }
        if (infeasibility > 1e-6 * (1.0 + b_.lpNorm<1>())) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        drive_out_artificials();
        if (!iterate(false, sol.iterations)) {
            sol.status = LpStatus::IterationLimit;
            return sol;
        }
        // Recover the unperturbed basic solution.
        b_work_ = b_;
        refactor();
        sol.x.assign(n_, 0.0);
        for (size_t i = 0; i < m_; i++) {
            if (basis_[i] < n_) {
                sol.x[basis_[i]] = std::max(0.0, xb_(i));
            }
        }
        sol.objective = 0;
        for (size_t j = 0; j < n_; j++) {
            sol.objective += lp_.cost[j] * sol.x[j];
        }
        Eigen::VectorXd ax = Eigen::VectorXd::Zero(m_);
        for (size_t j = 0; j < n_; j++) {
            if (sol.x[j] != 0) {
                for (size_t e = lp_.col_start[j]; e < lp_.col_start[j + 1]; e++) {
                    ax(lp_.row_index[e]) += lp_.value[e] * sol.x[j];
                }
            }
        }
        double res = 0;
        for (size_t i = 0; i < m_; i++) {
            res = std::max(res, std::abs(ax(i) - lp_.b[i]));
        }
        sol.residual = res;
        sol.status = LpStatus::Optimal;
        return sol;
    }

   private:
    // Column j of the sign-normalized constraint matrix (artificials are unit).
    void load_column(size_t j, Eigen::VectorXd &out) const {
        out.setZero(m_);
        if (j >= n_) {
            out(j - n_) = 1.0;
            return;
        }
        for (size_t e = lp_.col_start[j]; e < lp_.col_start[j + 1]; e++) {
            out(lp_.row_index[e]) = sign_[lp_.row_index[e]] * lp_.value[e];
        }
    }

    double dot_column(size_t j, const Eigen::VectorXd &y) const {
        if (j >= n_) {
            return y(j - n_);
        }
        double s = 0;
        for (size_t e = lp_.col_start[j]; e < lp_.col_start[j + 1]; e++) {
            s += y(lp_.row_index[e]) * sign_[lp_.row_index[e]] * lp_.value[e];
        }
        return s;
    }

    void refactor() {
        Eigen::MatrixXd bm(m_, m_);
        Eigen::VectorXd col;
        for (size_t i = 0; i < m_; i++) {
            load_column(basis_[i], col);
            bm.col(i) = col;
        }
        lu_.compute(bm);
        etas_.clear();
        xb_ = lu_.solve(b_work_);
        for (size_t i = 0; i < m_; i++) {
            if (!std::isfinite(xb_(i))) {
                throw NumericalFailure("basis factorization became singular");
            }
        }
    }

    void ftran(Eigen::VectorXd &v) const {
        v = lu_.solve(v);
        for (const auto &eta : etas_) {
            double vr = v(eta.row);
            if (vr == 0) {
                continue;
            }
            v(eta.row) = 0;
            v += vr * eta.column;
        }
    }

    void btran(Eigen::VectorXd &v) const {
        for (size_t k = etas_.size(); k-- > 0;) {
            const auto &eta = etas_[k];
            v(eta.row) = eta.column.dot(v);
        }
        v = lu_.transpose().solve(v);
    }

    double cost(size_t j, bool phase1) const {
        if (phase1) {
            return j >= n_ ? 1.0 : 0.0;
        }
        return j >= n_ ? 0.0 : lp_.cost[j];
    }

    void pivot(size_t r, size_t q, const Eigen::VectorXd &w) {
        double wr = w(r);
        double theta = xb_(r) / wr;
        xb_ -= theta * w;
        xb_(r) = theta;
        for (size_t i = 0; i < m_; i++) {
            if (xb_(i) < 0 && xb_(i) > -1e-11) {
                xb_(i) = 0;
            }
        }
        Eta eta{r, -w / wr};
        eta.column(r) = 1.0 / wr;
        etas_.push_back(std::move(eta));
        pos_[basis_[r]] = -1;
        basis_[r] = q;
        pos_[q] = static_cast<long>(r);
        if (etas_.size() >= opt_.refactor_interval) {
            refactor();
        }
    }

    bool iterate(bool phase1, size_t &iterations) {
        const double tol = opt_.tolerance;
        bool bland = false;
        size_t stall = 0;
        Eigen::VectorXd y(m_), w(m_);
        while (true) {
            if (iterations++ > opt_.max_iterations) {
                return false;
            }
            for (size_t i = 0; i < m_; i++) {
                y(i) = cost(basis_[i], phase1);
            }
            btran(y);
            size_t entering = SIZE_MAX;
            double best = -tol;
            for (size_t j = 0; j < n_; j++) {
                if (pos_[j] >= 0) {
                    continue;
                }
                double d = cost(j, phase1) - dot_column(j, y);
                if (d < best) {
                    entering = j;
                    if (bland) {
                        break;
                    }
                    best = d;
                }
            }
            if (entering == SIZE_MAX) {
                return true;
            }
            load_column(entering, w);
            ftran(w);
            // Harris ratio test: bound the step with a small tolerance, then
            // pick the largest pivot element among admissible rows.
            double theta_max = INFINITY;
            for (size_t i = 0; i < m_; i++) {
                if (w(i) > tol) {
                    theta_max = std::min(theta_max, (std::max(xb_(i), 0.0) + 1e-10) / w(i));
                }
            }
            if (!std::isfinite(theta_max)) {
                throw NumericalFailure("LP is unbounded");
            }
            size_t leave = SIZE_MAX;
            double best_w = 0;
            for (size_t i = 0; i < m_; i++) {
                if (w(i) > tol && std::max(xb_(i), 0.0) / w(i) <= theta_max) {
                    bool better = bland ? (leave == SIZE_MAX || basis_[i] < basis_[leave]) : w(i) > best_w;
                    if (better) {
                        leave = i;
                        best_w = w(i);
                    }
                }
            }
            double step = std::max(xb_(leave), 0.0) / w(leave);
            if (step * -best < 1e-13) {
                if (++stall > 200) {
                    bland = true;
                }
            } else {
                stall = 0;
                bland = false;
            }
            pivot(leave, entering, w);
        }
    }

    void drive_out_artificials() {
        Eigen::VectorXd row(m_), w(m_);
        for (size_t r = 0; r < m_; r++) {
            if (basis_[r] < n_) {
                continue;
            }
            row.setZero();
            row(r) = 1.0;
            btran(row);
            size_t pick = SIZE_MAX;
            double best = 1e-7;
            for (size_t j = 0; j < n_; j++) {
                if (pos_[j] >= 0) {
                    continue;
                }
                double a = std::abs(dot_column(j, row));
                if (a > best) {
                    best = a;
                    pick = j;
                }
            }
            if (pick == SIZE_MAX) {
                continue;  // redundant row
            }
            load_column(pick, w);
            ftran(w);
            pivot(r, pick, w);
        }
    }

    const LpProblem &lp_;
    SimplexOptions opt_;
    size_t m_;
    size_t n_;
    std::vector<double> sign_;
    Eigen::VectorXd b_;
    Eigen::VectorXd b_work_;
    Eigen::VectorXd xb_;
    std::vector<size_t> basis_;
    std::vector<long> pos_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    std::vector<Eta> etas_;
};

}  // namespace

LpSolution RevisedSimplex::solve(const LpProblem &problem) {
    if (problem.col_start.size() != problem.cols() + 1) {
        throw ShapeError("LP column storage is inconsistent");
    }
    SimplexRun run(problem, options_);
    return run.run();
}

}  // namespace qpbc
