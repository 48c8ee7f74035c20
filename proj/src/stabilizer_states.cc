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

#include "qpbc/stabilizer_states.h"

#include <cmath>
#include <cstring>
#include <fstream>

#include "qpbc/errors.h"

namespace qpbc {

uint64_t stabilizer_state_count(uint32_t p, size_t n) {
    PrimeField f(p);
    long double count = 1;
    uint64_t exact = 1;
    uint64_t pj = 1;
    for (size_t j = 0; j < n; j++) {
        exact *= p;
        count *= p;
    }
    for (size_t j = 1; j <= n; j++) {
        pj *= p;
        exact *= pj + 1;
        count *= static_cast<long double>(pj) + 1;
    }
    if (count > 1.8e19L) {
        return UINT64_MAX;
    }
    return exact;
}

namespace {

// Increments a base-p counter; returns false after wrapping to all zeros.
bool next_digits(std::vector<uint32_t> &d, uint32_t p) {
    for (size_t i = 0; i < d.size(); i++) {
        if (++d[i] < p) {
            return true;
        }
        d[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<StabilizerStateDesc> enumerate_stabilizer_states(uint32_t p, size_t n, uint64_t limit) {
    uint64_t total = stabilizer_state_count(p, n);
    if (total > limit) {
        throw EnumerationTooLarge(std::to_string(n) + "-qudit stabilizer states for p=" + std::to_string(p) +
                                  " number " + std::to_string(total) + ", above the limit " + std::to_string(limit));
    }
    std::vector<StabilizerStateDesc> out;
    out.reserve(total);
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        std::vector<size_t> piv;
        std::vector<bool> is_piv(n, false);
        for (size_t c = 0; c < n; c++) {
            if (mask >> c & 1) {
                piv.push_back(c);
                is_piv[c] = true;
            }
        }
        const size_t k = piv.size();
        std::vector<std::pair<size_t, size_t>> free_slots;
        for (size_t i = 0; i < k; i++) {
            for (size_t c = piv[i] + 1; c < n; c++) {
                if (!is_piv[c]) {
                    free_slots.push_back({i, c});
                }
            }
        }
        std::vector<size_t> off_slots;
        for (size_t c = 0; c < n; c++) {
            if (!is_piv[c]) {
                off_slots.push_back(c);
            }
        }
        std::vector<uint32_t> bd(free_slots.size(), 0);
        do {
            FpMatrix basis(k, FpVector(n, 0));
            for (size_t i = 0; i < k; i++) {
                basis[i][piv[i]] = 1;
            }
            for (size_t s = 0; s < free_slots.size(); s++) {
                basis[free_slots[s].first][free_slots[s].second] = bd[s];
            }
            std::vector<uint32_t> od(off_slots.size(), 0);
            do {
                FpVector offset(n, 0);
                for (size_t s = 0; s < off_slots.size(); s++) {
                    offset[off_slots[s]] = od[s];
                }
                std::vector<uint32_t> qd(k * (k + 1) / 2 + k, 0);
                do {
                    StabilizerStateDesc d;
                    d.p = p;
                    d.n = n;
                    d.basis = basis;
                    d.offset = offset;
                    d.quad.assign(k, FpVector(k, 0));
                    size_t idx = 0;
                    for (size_t i = 0; i < k; i++) {
                        for (size_t j = i; j < k; j++) {
                            d.quad[i][j] = d.quad[j][i] = qd[idx++];
                        }
                    }
                    d.linear.assign(qd.begin() + idx, qd.end());
                    out.push_back(std::move(d));
                } while (next_digits(qd, p));
            } while (next_digits(od, p));
        } while (next_digits(bd, p));
    }
    return out;
}

Eigen::VectorXcd state_vector(const StabilizerStateDesc &d) {
    PrimeField f(d.p);
    size_t dim = checked_dimension(d.p, d.n, oracle_limit());
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    const size_t k = d.k();
    const double amp = std::pow(static_cast<double>(d.p), -0.5 * static_cast<double>(k));
    std::vector<uint32_t> y(k, 0);
    do {
        size_t index = 0;
        for (size_t c = 0; c < d.n; c++) {
            uint32_t digit = d.offset[c];
            for (size_t i = 0; i < k; i++) {
                digit = f.add(digit, f.mul(y[i], d.basis[i][c]));
            }
            index = index * d.p + digit;
        }
        uint32_t phase = 0;
        for (size_t i = 0; i < k; i++) {
            phase = f.add(phase, f.mul(d.linear[i], y[i]));
            for (size_t j = 0; j < k; j++) {
                phase = f.add(phase, f.mul(d.quad[i][j], f.mul(y[i], y[j])));
            }
        }
        v(static_cast<Eigen::Index>(index)) = amp * root_of_unity(d.p, phase);
    } while (next_digits(y, d.p));
    return v;
}

StabilizerTableau tableau_of(const StabilizerStateDesc &d) {
    PrimeField f(d.p);
    const size_t k = d.k();
    const size_t n = d.n;
    std::vector<PauliObservable> gens;
    // Z-type generators from the annihilator of the support.
    for (const auto &u : fp_nullspace(f, d.basis, n)) {
        uint32_t ub = 0;
        for (size_t c = 0; c < n; c++) {
            ub = f.add(ub, f.mul(u[c], d.offset[c]));
        }
        std::vector<int64_t> x(n, 0), z(u.begin(), u.end());
        gens.emplace_back(d.p, -static_cast<int64_t>(ub), x, z);
    }
    // Shift generators: X(B_i) Z(w) with w . B_j = 2 Q_ij, w on pivots.
    std::vector<size_t> piv(k);
    for (size_t i = 0; i < k; i++) {
        size_t c = 0;
        while (d.basis[i][c] == 0) {
            c++;
        }
        piv[i] = c;
    }
    for (size_t i = 0; i < k; i++) {
        std::vector<int64_t> x(d.basis[i].begin(), d.basis[i].end()), z(n, 0);
        uint32_t wb = 0;
        for (size_t j = 0; j < k; j++) {
            uint32_t w = f.mul(2, d.quad[i][j]);
            z[piv[j]] = w;
            wb = f.add(wb, f.mul(w, d.offset[piv[j]]));
        }
        int64_t lambda = static_cast<int64_t>(d.quad[i][i]) + d.linear[i] - wb;
        gens.emplace_back(d.p, lambda, x, z);
    }
    return StabilizerTableau(d.p, std::move(gens));
}

namespace {

constexpr char kMagic[8] = {'Q', 'P', 'B', 'C', 'S', 'T', 'A', 'B'};

template <typename T>
void put(std::ofstream &out, T v) {
    out.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream &in, const std::string &path) {
    T v{};
    in.read(reinterpret_cast<char *>(&v), sizeof(T));
    if (!in) {
        throw FormatError("truncated enumeration cache " + path);
    }
    return v;
}

}  // namespace

void save_enumeration(const std::string &path, uint32_t p, size_t n, const std::vector<StabilizerStateDesc> &states) {
    if (p > 255) {
        throw FormatError("enumeration cache stores entries as bytes; p must be below 256");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot write enumeration cache " + path);
    }
    out.write(kMagic, sizeof(kMagic));
    put<uint32_t>(out, kEnumerationFormatVersion);
    put<uint32_t>(out, p);
    put<uint32_t>(out, static_cast<uint32_t>(n));
    put<uint64_t>(out, states.size());
    for (const auto &d : states) {
        const size_t k = d.k();
        put<uint8_t>(out, static_cast<uint8_t>(k));
        for (const auto &row : d.basis) {
            for (auto v : row) {
                put<uint8_t>(out, static_cast<uint8_t>(v));
            }
        }
        for (auto v : d.offset) {
            put<uint8_t>(out, static_cast<uint8_t>(v));
        }
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i; j < k; j++) {
                put<uint8_t>(out, static_cast<uint8_t>(d.quad[i][j]));
            }
        }
        for (auto v : d.linear) {
            put<uint8_t>(out, static_cast<uint8_t>(v));
        }
    }
}

bool load_enumeration(const std::string &path, uint32_t p, size_t n, std::vector<StabilizerStateDesc> &states) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw FormatError(path + " is not an enumeration cache");
    }
    uint32_t version = get<uint32_t>(in, path);
    uint32_t fp = get<uint32_t>(in, path);
    uint32_t fn = get<uint32_t>(in, path);
    if (version != kEnumerationFormatVersion || fp != p || fn != n) {
        throw FormatError(path + " holds version " + std::to_string(version) + " for (p=" + std::to_string(fp) +
                          ", n=" + std::to_string(fn) + ")");
    }
    uint64_t count = get<uint64_t>(in, path);
    std::vector<StabilizerStateDesc> result;
    result.reserve(count);
    for (uint64_t s = 0; s < count; s++) {
        StabilizerStateDesc d;
        d.p = p;
        d.n = n;
        size_t k = get<uint8_t>(in, path);
        if (k > n) {
            throw FormatError("corrupt enumeration cache " + path);
        }
        d.basis.assign(k, FpVector(n, 0));
        for (auto &row : d.basis) {
            for (auto &v : row) {
                v = get<uint8_t>(in, path);
            }
        }
        d.offset.assign(n, 0);
        for (auto &v : d.offset) {
            v = get<uint8_t>(in, path);
        }
        d.quad.assign(k, FpVector(k, 0));
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i; j < k; j++) {
                d.quad[i][j] = d.quad[j][i] = get<uint8_t>(in, path);
            }
        }
        d.linear.assign(k, 0);
        for (auto &v : d.linear) {
            v = get<uint8_t>(in, path);
        }
        result.push_back(std::move(d));
    }
    states = std::move(result);
    return true;
}

}  // namespace qpbc
