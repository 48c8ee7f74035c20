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

#include <gtest/gtest.h>

#include <random>

#include "qpbc/errors.h"

using namespace qpbc;

namespace {

LpProblem dense_problem(const std::vector<std::vector<double>> &a, const std::vector<double> &b,
                        const std::vector<double> &c) {
    LpProblem lp;
    lp.rows = a.size();
    lp.b = b;
    for (size_t j = 0; j < c.size(); j++) {
        std::vector<std::pair<uint32_t, double>> col;
        for (size_t i = 0; i < a.size(); i++) {
            if (a[i][j] != 0) {
                col.push_back({static_cast<uint32_t>(i), a[i][j]});
            }
        }
        lp.add_column(c[j], col);
    }
    return lp;
}

double max_residual(const LpProblem &lp, const std::vector<double> &x) {
    std::vector<double> ax(lp.rows, 0.0);
    for (size_t j = 0; j < lp.cols(); j++) {
        for (size_t k = lp.col_start[j]; k < lp.col_start[j + 1]; k++) {
            ax[lp.row_index[k]] += lp.value[k] * x[j];
        }
    }
    double r = 0;
    for (size_t i = 0; i < lp.rows; i++) {
        r = std::max(r, std::abs(ax[i] - lp.b[i]));
    }
    return r;
}

}  // namespace

TEST(lp, small_known_optimum) {
    // min -x1 - 2 x2 s.t. x1 + x2 + s1 = 4, x1 + 3 x2 + s2 = 6. Optimum at (3, 1): -5.
    auto lp = dense_problem({{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {-1, -2, 0, 0});
    for (std::shared_ptr<LpSolver> solver :
         {std::shared_ptr<LpSolver>(std::make_shared<RevisedSimplex>()), std::shared_ptr<LpSolver>(std::make_shared<InteriorPoint>())}) {
        auto sol = solver->solve(lp);
        ASSERT_EQ(sol.status, LpStatus::Optimal) << solver->name();
        EXPECT_NEAR(sol.objective, -5, 1e-7) << solver->name();
        EXPECT_NEAR(sol.x[0], 3, 1e-6);
        EXPECT_NEAR(sol.x[1], 1, 1e-6);
        EXPECT_LT(max_residual(lp, sol.x), 1e-7);
    }
}

TEST(lp, l1_minimization_form) {
    // min |c1| + |c2| s.t. c1 + c2 = 1, c1 - c2 = 3 -> c = (2, -1), norm 3.
    auto lp = dense_problem({{1, -1, 1, -1}, {1, -1, -1, 1}}, {1, 3}, {1, 1, 1, 1});
    auto a = RevisedSimplex().solve(lp);
    auto b = InteriorPoint().solve(lp);
    ASSERT_EQ(a.status, LpStatus::Optimal);
    ASSERT_EQ(b.status, LpStatus::Optimal);
    EXPECT_NEAR(a.objective, 3, 1e-8);
    EXPECT_NEAR(b.objective, 3, 1e-8);
}

TEST(lp, simplex_detects_infeasible) {
    // x1 + x2 = -1 with x >= 0.
    auto lp = dense_problem({{1, 1}}, {-1}, {1, 1});
    EXPECT_EQ(RevisedSimplex().solve(lp).status, LpStatus::Infeasible);
}

TEST(lp, solvers_agree_on_random_feasible_problems) {
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 40; trial++) {
        size_t m = 3 + trial % 6;
        size_t n = 2 * m + trial % 5;
        std::vector<std::vector<double>> a(m, std::vector<double>(n));
        std::vector<double> x0(n), c(n), b(m, 0.0);
        for (size_t j = 0; j < n; j++) {
            x0[j] = std::abs(u(rng));
            c[j] = 1 + std::abs(u(rng));  // bounded below by 0
        }
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < n; j++) {
                a[i][j] = u(rng);
                b[i] += a[i][j] * x0[j];
            }
        }
        auto lp = dense_problem(a, b, c);
        auto s = RevisedSimplex().solve(lp);
        auto ip = InteriorPoint().solve(lp);
        ASSERT_EQ(s.status, LpStatus::Optimal);
        ASSERT_EQ(ip.status, LpStatus::Optimal);
        EXPECT_NEAR(s.objective, ip.objective, 1e-6 * (1 + std::abs(s.objective)));
        EXPECT_LT(max_residual(lp, s.x), 1e-7);
        EXPECT_LT(max_residual(lp, ip.x), 1e-7);
        for (double v : ip.x) {
            EXPECT_GE(v, 0.0);
        }
    }
}
