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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qpbc/errors.h"
#include "qpbc/lp.h"

namespace qpbc {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

class Normal {
   public:
    explicit Normal(const LpProblem &lp) : lp_(lp), m_(lp.rows), n_(lp.cols()) {
    }

    VectorXd times(const VectorXd &x) const {
        VectorXd out = VectorXd::Zero(m_);
        for (size_t j = 0; j < n_; j++) {
            double v = x(j);
            if (v == 0) {
                continue;
            }
            for (size_t e = lp_.col_start[j]; e < lp_.col_start[j + 1]; e++) {
                out(lp_.row_index[e]) += lp_.value[e] * v;
            }
        }
        return out;
    }

    VectorXd transpose_times(const VectorXd &y) const {
        VectorXd out(n_);
        for (size_t j = 0; j < n_; j++) {
            double s = 0;
            for (size_t e = lp_.col_start[j]; e < lp_.col_start[j + 1]; e++) {
                s += lp_.value[e] * y(lp_.row_index[e]);
            }
            out(j) = s;
        }
        return out;
    }

    // A diag(d) A^T, lower triangle only.
    MatrixXd weighted_gram(const VectorXd &d) const {
        MatrixXd g = MatrixXd::Zero(m_, m_);
        for (size_t j = 0; j < n_; j++) {
            double w = d(j);
            for (size_t e = lp_.col_start[j]; e < lp_.col_start[j + 1]; e++) {
                double we = w * lp_.value[e];
                size_t r = lp_.row_index[e];
                for (size_t f = lp_.col_start[j]; f < lp_.col_start[j + 1]; f++) {
                    size_t s = lp_.row_index[f];
                    if (s <= r) {
                        g(r, s) += we * lp_.value[f];
                    }
                }
            }
        }
        return g;
    }

   private:
    const LpProblem &lp_;
    size_t m_;
    size_t n_;
};

class Factor {
   public:
    void compute(MatrixXd g) {
        const size_t m = static_cast<size_t>(g.rows());
        double scale = g.diagonal().cwiseAbs().maxCoeff();
        double reg = 0;
        for (int attempt = 0; attempt < 8; attempt++) {
            MatrixXd h = g;
            for (size_t i = 0; i < m; i++) {
                h(i, i) += reg;
            }
            llt_.compute(h.selfadjointView<Eigen::Lower>());
            if (llt_.info() == Eigen::Success) {
                return;
            }
            reg = reg == 0 ? 1e-14 * (1 + scale) : reg * 100;
        }
        throw NumericalFailure("normal equations are not positive definite; constraint rows may be dependent");
    }
    VectorXd solve(const VectorXd &v) const {
        return llt_.solve(v);
    }

   private:
    Eigen::LLT<MatrixXd> llt_;
};

double max_step(const VectorXd &v, const VectorXd &dv) {
    double a = 1.0;
    for (Eigen::Index i = 0; i < v.size(); i++) {
        if (dv(i) < 0) {
            a = std::min(a, -v(i) / dv(i));
        }
    }
    return a;
}

}  // namespace

LpSolution InteriorPoint::solve(const LpProblem &lp) {
    const size_t m = lp.rows;
    const size_t n = lp.cols();
    if (lp.col_start.size() != n + 1 || lp.b.size() != m) {
        throw ShapeError("LP storage is inconsistent");
    }
    Normal a(lp);
    Factor factor;
    VectorXd b = Eigen::Map<const VectorXd>(lp.b.data(), m);
    VectorXd c = Eigen::Map<const VectorXd>(lp.cost.data(), n);

    // Starting point from the least-squares solutions, shifted into the
    // interior.
    factor.compute(a.weighted_gram(VectorXd::Ones(n)));
    VectorXd x = a.transpose_times(factor.solve(b));
    VectorXd y = factor.solve(a.times(c));
    VectorXd s = c - a.transpose_times(y);
    double dx = std::max(-1.5 * x.minCoeff(), 0.0);
    double ds = std::max(-1.5 * s.minCoeff(), 0.0);
    x.array() += dx;
    s.array() += ds;
    double xs = x.dot(s);
    x.array() += 0.5 * xs / s.sum();
    s.array() += 0.5 * xs / x.sum();
    x = x.cwiseMax(1e-8);
    s = s.cwiseMax(1e-8);

    const double bnorm = 1 + b.norm();
    const double cnorm = 1 + c.norm();
    LpSolution sol;
    for (size_t it = 0; it < options_.max_iterations; it++) {
        sol.iterations = it;
        VectorXd rp = b - a.times(x);
        VectorXd rd = c - a.transpose_times(y) - s;
        double mu = x.dot(s) / static_cast<double>(n);
        double pobj = c.dot(x);
        double dobj = b.dot(y);
        if (rp.norm() / bnorm < options_.tolerance && rd.norm() / cnorm < options_.tolerance &&
            std::abs(pobj - dobj) / (1 + std::abs(pobj)) < options_.tolerance) {
            sol.status = LpStatus::Optimal;
            break;
        }
        if (!std::isfinite(mu) || mu > 1e40) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        VectorXd d = x.cwiseQuotient(s);
        factor.compute(a.weighted_gram(d));

        // Solves for a given complementarity right-hand side rc.
        auto direction = [&](const VectorXd &rc, VectorXd &ddx, VectorXd &ddy, VectorXd &dds) {
            VectorXd rhs = rp - a.times(rc.cwiseQuotient(s)) + a.times(d.cwiseProduct(rd));
            ddy = factor.solve(rhs);
            dds = rd - a.transpose_times(ddy);
            ddx = rc.cwiseQuotient(s) - d.cwiseProduct(dds);
        };

        VectorXd xa, ya, sa;
        VectorXd rc = -x.cwiseProduct(s);
        direction(rc, xa, ya, sa);
        double ap = max_step(x, xa);
        double ad = max_step(s, sa);
        double mu_aff = (x + ap * xa).dot(s + ad * sa) / static_cast<double>(n);
        double sigma = std::pow(mu_aff / mu, 3);

        rc = (sigma * mu) * VectorXd::Ones(n) - x.cwiseProduct(s) - xa.cwiseProduct(sa);
        VectorXd ddx, ddy, dds;
        direction(rc, ddx, ddy, dds);
        ap = std::min(1.0, 0.99 * max_step(x, ddx));
        ad = std::min(1.0, 0.99 * max_step(s, dds));
        x += ap * ddx;
        y += ad * ddy;
        s += ad * dds;
    }
    if (sol.status != LpStatus::Optimal) {
        return sol;
    }
    sol.x.assign(x.data(), x.data() + n);
    sol.objective = c.dot(x);
    VectorXd r = a.times(x) - b;
    sol.residual = r.cwiseAbs().maxCoeff();
    return sol;
}

}  // namespace qpbc
