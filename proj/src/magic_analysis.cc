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

#include "qpbc/magic_analysis.h"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "qpbc/errors.h"
#include "qpbc/statevector.h"

namespace qpbc {

Eigen::VectorXcd magic_state_vector(uint32_t p, const MagicParams &params) {
    validate_magic_params(p, params);
    return magic_state(p, params).amplitudes();
}

Eigen::VectorXcd tensor_power(const Eigen::VectorXcd &v, size_t copies) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Ones(1);
    for (size_t c = 0; c < copies; c++) {
        Eigen::VectorXcd next(out.size() * v.size());
        for (Eigen::Index i = 0; i < out.size(); i++) {
            next.segment(i * v.size(), v.size()) = out(i) * v;
        }
        out = std::move(next);
    }
    return out;
}

size_t qudit_count(uint32_t p, size_t dim) {
    PrimeField f(p);
    size_t n = 0;
    size_t d = 1;
    while (d < dim) {
        d *= p;
        n++;
    }
    if (d != dim) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not a power of " + std::to_string(p));
    }
    return n;
}

namespace {

// In-place sum_k omega^{z.k} u_k over all z, one digit at a time.
void digit_fourier(uint32_t p, size_t n, std::vector<std::complex<double>> &u) {
    std::vector<std::complex<double>> w(p);
    for (uint32_t k = 0; k < p; k++) {
        w[k] = root_of_unity(p, k);
    }
    std::vector<std::complex<double>> in(p), out(p);
    size_t stride = 1;
    for (size_t q = 0; q < n; q++, stride *= p) {
        size_t block = stride * p;
        for (size_t base = 0; base < u.size(); base += block) {
            for (size_t off = 0; off < stride; off++) {
                for (uint32_t k = 0; k < p; k++) {
                    in[k] = u[base + off + k * stride];
                }
                for (uint32_t z = 0; z < p; z++) {
                    std::complex<double> s = 0;
                    for (uint32_t k = 0; k < p; k++) {
                        s += w[(static_cast<uint64_t>(z) * k) % p] * in[k];
                    }
                    out[z] = s;
                }
                for (uint32_t z = 0; z < p; z++) {
                    u[base + off + z * stride] = out[z];
                }
            }
        }
    }
}

// Index of k + x, digit-wise mod p.
std::vector<size_t> shift_table(uint32_t p, size_t n, size_t x_index) {
    size_t dim = 1;
    for (size_t i = 0; i < n; i++) {
        dim *= p;
    }
    std::vector<size_t> out(dim);
    for (size_t k = 0; k < dim; k++) {
        size_t a = k, b = x_index, r = 0, place = 1;
        for (size_t i = 0; i < n; i++) {
            r += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out[k] = r;
    }
    return out;
}

template <typename Entry>
std::vector<std::complex<double>> expectations_impl(uint32_t p, size_t dim, Entry entry) {
    size_t n = qudit_count(p, dim);
    std::vector<std::complex<double>> out(dim * dim);
    std::vector<std::complex<double>> u(dim);
    for (size_t x = 0; x < dim; x++) {
        auto shift = shift_table(p, n, x);
        for (size_t k = 0; k < dim; k++) {
            u[k] = entry(k, shift[k]);
        }
        digit_fourier(p, n, u);
        std::copy(u.begin(), u.end(), out.begin() + x * dim);
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> pauli_expectations(uint32_t p, const Eigen::MatrixXcd &rho) {
    if (rho.rows() != rho.cols()) {
        throw ShapeError("density matrix must be square");
    }
    return expectations_impl(p, static_cast<size_t>(rho.rows()),
                             [&](size_t k, size_t kx) { return rho(k, kx); });
}

std::vector<std::complex<double>> pauli_expectations(uint32_t p, const Eigen::VectorXcd &psi) {
    return expectations_impl(p, static_cast<size_t>(psi.size()),
                             [&](size_t k, size_t kx) { return psi(k) * std::conj(psi(kx)); });
}

std::vector<StabilizerStateDesc> stabilizer_basis(uint32_t p, size_t n, const RomOptions &options) {
    std::string path;
    if (!options.cache_dir.empty()) {
        path = (std::filesystem::path(options.cache_dir) /
                ("stab_p" + std::to_string(p) + "_n" + std::to_string(n) + "_v" +
                 std::to_string(kEnumerationFormatVersion) + ".bin"))
                   .string();
        std::vector<StabilizerStateDesc> cached;
        if (load_enumeration(path, p, n, cached)) {
            if (cached.size() != stabilizer_state_count(p, n)) {
                throw FormatError("enumeration cache " + path + " has the wrong number of states");
            }
            return cached;
        }
    }
    auto states = enumerate_stabilizer_states(p, n, options.enumeration_limit);
    if (!path.empty()) {
        std::filesystem::create_directories(options.cache_dir);
        save_enumeration(path, p, n, states);
    }
    return states;
}

namespace {

// Row layout of the RoM LP: row 0 fixes the trace; every pair {P, P^-1} of
// nontrivial Paulis contributes the real and imaginary parts of one
// representative. That gives exactly p^{2n} independent rows.
class RowMap {
   public:
    RowMap(uint32_t p, size_t n) : p_(p), n_(n) {
        dim_ = 1;
        for (size_t i = 0; i < n; i++) {
            dim_ *= p;
        }
        row_.assign(dim_ * dim_, -1);
        long next = 0;
        for (size_t key = 1; key < dim_ * dim_; key++) {
            if (is_representative(key)) {
                row_[key] = 1 + 2 * next++;
            }
        }
        rows_ = 1 + 2 * static_cast<size_t>(next);
    }
    size_t rows() const {
        return rows_;
    }
    size_t dim() const {
        return dim_;
    }
    long row(size_t key) const {
        return row_[key];
    }
    size_t key(const std::vector<uint32_t> &x, const std::vector<uint32_t> &z) const {
        size_t xi = 0, zi = 0;
        for (size_t q = 0; q < n_; q++) {
            xi = xi * p_ + x[q];
            zi = zi * p_ + z[q];
        }
        return xi * dim_ + zi;
    }

   private:
    // First nonzero base-p digit (most significant first) at most (p-1)/2.
    bool is_representative(size_t key) const {
        std::vector<uint32_t> digits(2 * n_);
        for (size_t i = 2 * n_; i-- > 0;) {
            digits[i] = key % p_;
            key /= p_;
        }
        for (auto d : digits) {
            if (d != 0) {
                return d <= (p_ - 1) / 2;
            }
        }
        return false;
    }

    uint32_t p_;
    size_t n_;
    size_t dim_;
    size_t rows_;
    std::vector<long> row_;
};

std::vector<PauliObservable> group_elements(const StabilizerTableau &t) {
    std::vector<PauliObservable> elems{PauliObservable::identity(t.p(), t.n())};
    for (const auto &g : t.generators()) {
        std::vector<PauliObservable> next;
        next.reserve(elems.size() * t.p());
        for (const auto &e : elems) {
            PauliObservable cur = e;
            for (uint32_t k = 0; k < t.p(); k++) {
                next.push_back(cur);
                cur = pauli_mul(cur, g);
            }
        }
        elems = std::move(next);
    }
    return elems;
}

}  // namespace

RomResult rom(const Eigen::MatrixXcd &rho, const std::vector<StabilizerStateDesc> &basis, const RomOptions &options) {
    if (basis.empty()) {
        throw ShapeError("empty stabilizer basis");
    }
    const uint32_t p = basis.front().p;
    const size_t n = basis.front().n;
    RowMap rows(p, n);
    if (static_cast<size_t>(rho.rows()) != rows.dim() || static_cast<size_t>(rho.cols()) != rows.dim()) {
        throw ShapeError("density matrix dimension does not match the basis");
    }

    LpProblem lp;
    lp.rows = rows.rows();
    lp.b.assign(lp.rows, 0.0);
    auto expect = pauli_expectations(p, rho);
    lp.b[0] = expect[0].real();
    for (size_t key = 1; key < expect.size(); key++) {
        long r = rows.row(key);
        if (r >= 0) {
            lp.b[r] = expect[key].real();
            lp.b[r + 1] = expect[key].imag();
        }
    }

    std::vector<std::pair<uint32_t, double>> plus, minus;
    for (const auto &d : basis) {
        plus.clear();
        plus.push_back({0, 1.0});
        for (const auto &g : group_elements(tableau_of(d))) {
            if (g.is_trivial()) {
                continue;
            }
            long r = rows.row(rows.key(g.x(), g.z()));
            if (r < 0) {
                continue;
            }
            // g |s> = |s>  gives  <s| X(x) Z(z) |s> = omega^{-lambda}.
            auto v = root_of_unity(p, -static_cast<int64_t>(g.lambda()));
            if (std::abs(v.real()) > 1e-15) {
                plus.push_back({static_cast<uint32_t>(r), v.real()});
            }
            if (std::abs(v.imag()) > 1e-15) {
                plus.push_back({static_cast<uint32_t>(r + 1), v.imag()});
            }
        }
        minus = plus;
        for (auto &e : minus) {
            e.second = -e.second;
        }
        lp.add_column(1.0, plus);
        lp.add_column(1.0, minus);
    }

    std::shared_ptr<LpSolver> solver = options.solver;
    if (!solver) {
        solver = std::make_shared<InteriorPoint>();
    }
    LpSolution sol = solver->solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw NumericalFailure(std::string("RoM linear program did not reach an optimum (") +
                               (sol.status == LpStatus::Infeasible ? "infeasible" : "iteration limit") + ")");
    }
    RomResult result;
    result.coefficients.resize(basis.size());
    double largest = 0;
    for (size_t j = 0; j < basis.size(); j++) {
        result.coefficients[j] = sol.x[2 * j] - sol.x[2 * j + 1];
        largest = std::max(largest, std::abs(result.coefficients[j]));
    }
    // Interior solutions leave tiny weight on every state. Keep the support
    // and absorb the dropped weight with a minimum-norm correction so the
    // constraints hold to rounding.
    std::vector<size_t> support;
    for (size_t j = 0; j < basis.size(); j++) {
        if (std::abs(result.coefficients[j]) > 1e-7 * largest) {
            support.push_back(j);
        } else {
            result.coefficients[j] = 0;
        }
    }
    Eigen::MatrixXd as = Eigen::MatrixXd::Zero(lp.rows, support.size());
    Eigen::VectorXd cs(support.size());
    for (size_t k = 0; k < support.size(); k++) {
        size_t col = 2 * support[k];
        for (size_t e = lp.col_start[col]; e < lp.col_start[col + 1]; e++) {
            as(lp.row_index[e], k) = lp.value[e];
        }
        cs(k) = result.coefficients[support[k]];
    }
    Eigen::VectorXd bv = Eigen::Map<const Eigen::VectorXd>(lp.b.data(), lp.rows);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(as);
    cs += cod.solve(bv - as * cs);
    result.residual = (as * cs - bv).cwiseAbs().maxCoeff();
    for (size_t k = 0; k < support.size(); k++) {
        result.coefficients[support[k]] = cs(k);
        result.value += std::abs(cs(k));
    }
    result.iterations = sol.iterations;
    return result;
}

RomResult rom_of_magic(uint32_t p, size_t copies, const MagicParams &params, const RomOptions &options) {
    Eigen::VectorXcd psi = tensor_power(magic_state_vector(p, params), copies);
    auto basis = stabilizer_basis(p, copies, options);
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    return rom(rho, basis, options);
}

double st_norm(uint32_t p, const Eigen::MatrixXcd &rho) {
    auto expect = pauli_expectations(p, rho);
    double s = 0;
    for (const auto &e : expect) {
        s += std::abs(e);
    }
    return s / static_cast<double>(rho.rows());
}

double renyi_entropy(const Eigen::VectorXcd &psi, double alpha, uint32_t p) {
    if (!(alpha >= 0) || alpha == 1.0) {
        throw ShapeError("alpha must be nonnegative and different from 1");
    }
    const size_t n = qudit_count(p, static_cast<size_t>(psi.size()));
    if (std::abs(psi.norm() - 1.0) > 1e-8) {
        throw NormalizationError("state has norm " + std::to_string(psi.norm()));
    }
    const double dim = static_cast<double>(psi.size());
    auto expect = pauli_expectations(p, psi);
    double total = 0;
    double moment = 0;
    for (const auto &e : expect) {
        double xi = std::norm(e) / dim;
        total += xi;
        if (xi > 1e-20) {
            moment += std::pow(xi, alpha);
        }
    }
    if (std::abs(total - 1.0) > 1e-8) {
        throw InternalInvariantViolation("Pauli distribution sums to " + std::to_string(total));
    }
    return std::log(moment) / (std::log(static_cast<double>(p)) * (1.0 - alpha)) - static_cast<double>(n);
}

BoundReport bound_report(uint32_t p, size_t copies, const MagicParams &params, const RomOptions &options) {
    if (copies == 0) {
        throw ShapeError("copies must be positive");
    }
    BoundReport r;
    r.p = p;
    r.copies = copies;
    r.rom = rom_of_magic(p, copies, params, options).value;
    r.rom_upper_exponent = 2.0 / static_cast<double>(copies) * std::log(r.rom) / std::log(static_cast<double>(p));
    r.renyi_lower_exponent = renyi_entropy(magic_state_vector(p, params), 0.5, p);
    return r;
}

}  // namespace qpbc
