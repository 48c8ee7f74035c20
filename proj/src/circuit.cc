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

#include "qpbc/circuit.h"

#include <charconv>
#include <set>
#include <sstream>

#include "qpbc/errors.h"

namespace qpbc {

size_t CircuitIR::magic_count() const {
    size_t r = 0;
    for (const auto &op : ops) {
        r += std::holds_alternative<UvGate>(op);
    }
    return r;
}

size_t CircuitIR::measure_count() const {
    size_t r = 0;
    for (const auto &op : ops) {
        r += std::holds_alternative<Measure>(op);
    }
    return r;
}

void validate_magic_params(uint32_t p, const MagicParams &params) {
    PrimeField f(p);
    if (params.z >= p || params.gamma >= p || params.epsilon >= p) {
        throw ShapeError("magic parameters must lie in [0, p)");
    }
    if (params.gamma == 0) {
        throw NotMagic("gamma' = 0 gives a Clifford gate, not a magic gate");
    }
}

MagicParams standard_magic_params(uint32_t p) {
    PrimeField f(p);
    return MagicParams{1, p - 1, 0};
}

uint32_t uv_root_order(uint32_t p) {
    PrimeField f(p);
    return p == 3 ? 9 : p;
}

std::vector<uint32_t> uv_exponent_vector(uint32_t p, const MagicParams &params) {
    validate_magic_params(p, params);
    const int64_t z = params.z, g = params.gamma, e = params.epsilon;
    std::vector<uint32_t> v(p, 0);
    if (p == 3) {
        auto m9 = [](int64_t a) { return static_cast<uint32_t>(((a % 9) + 9) % 9); };
        v[1] = m9(6 * z + 2 * g + 3 * e);
        v[2] = m9(6 * z + g + 6 * e);
        return v;
    }
    PrimeField f(p);
    const uint32_t inv12 = f.inv(f.reduce(12));
    for (int64_t k = 0; k < p; k++) {
        int64_t inner = g + k * (6 * z + g * (2 * k - 3));
        uint32_t term = f.mul(inv12, f.mul(f.reduce(k), f.reduce(inner)));
        v[k] = f.add(term, f.reduce(k * e));
    }
    return v;
}

namespace {

struct Token {
    std::string_view text;
    size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            i++;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            j++;
        }
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

class LineParser {
   public:
    LineParser(size_t line_number, std::vector<Token> tokens) : line_(line_number), tokens_(std::move(tokens)) {
    }

    [[noreturn]] void fail(const std::string &message, size_t token_index) const {
        size_t col = token_index < tokens_.size() ? tokens_[token_index].column : end_column();
        throw ParseError(message, line_, col);
    }

    size_t end_column() const {
        if (tokens_.empty()) {
            return 1;
        }
        return tokens_.back().column + tokens_.back().text.size();
    }

    int64_t integer(size_t index, const char *what) const {
        if (index >= tokens_.size()) {
            fail(std::string("missing ") + what, index);
        }
        auto s = tokens_[index].text;
        int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            fail(std::string("expected integer ") + what + ", got '" + std::string(s) + "'", index);
        }
        return value;
    }

    void expect_arity(size_t min_args, size_t max_args) const {
        size_t args = tokens_.size() - 1;
        if (args < min_args) {
            fail(std::string(tokens_[0].text) + " expects at least " + std::to_string(min_args) + " arguments",
                 tokens_.size());
        }
        if (args > max_args) {
            fail(std::string("unexpected extra argument to ") + std::string(tokens_[0].text), max_args + 1);
        }
    }

    const std::vector<Token> &tokens() const {
        return tokens_;
    }

   private:
    size_t line_;
    std::vector<Token> tokens_;
};

}  // namespace

void validate_circuit(const CircuitIR &c) {
    PrimeField f(c.p);
    std::set<size_t> measured;
    auto check_live = [&](size_t q) {
        if (q >= c.n) {
            throw IndexError("qudit " + std::to_string(q) + " outside [0, " + std::to_string(c.n) + ")");
        }
        if (measured.count(q)) {
            throw ShapeError("qudit " + std::to_string(q) + " is used after being measured");
        }
    };
    for (const auto &op : c.ops) {
        if (auto g = std::get_if<CliffordGate>(&op)) {
            validate_gate(*g, c.p, c.n);
            check_live(g->target);
            if (g->is_two_qudit()) {
                check_live(g->control);
            }
        } else if (auto u = std::get_if<UvGate>(&op)) {
            check_live(u->target);
            validate_magic_params(c.p, u->params);
        } else {
            size_t q = std::get<Measure>(op).target;
            check_live(q);
            measured.insert(q);
        }
    }
}

CircuitIR parse_circuit(std::string_view text) {
    CircuitIR c;
    bool have_header = false;
    std::set<size_t> measured;
    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        LineParser lp(line_number, tokens);
        std::string_view head = tokens[0].text;
        if (!have_header) {
            if (head != "qudits") {
                lp.fail("expected header 'qudits <n> dim <p>'", 0);
            }
            if (tokens.size() != 4 || tokens[2].text != "dim") {
                lp.fail("malformed header; expected 'qudits <n> dim <p>'", tokens.size() > 2 ? 2 : tokens.size());
            }
            int64_t n = lp.integer(1, "qudit count");
            int64_t p = lp.integer(3, "dimension");
            if (n < 1) {
                lp.fail("qudit count must be positive", 1);
            }
            if (!is_odd_prime(p)) {
                lp.fail("dimension " + std::to_string(p) + " is not an odd prime", 3);
            }
            c.n = static_cast<size_t>(n);
            c.p = static_cast<uint32_t>(p);
            have_header = true;
            continue;
        }
        auto qudit = [&](size_t index) {
            int64_t q = lp.integer(index, "qudit index");
            if (q < 0 || static_cast<size_t>(q) >= c.n) {
                lp.fail("qudit index " + std::to_string(q) + " out of range [0, " + std::to_string(c.n) + ")", index);
            }
            if (measured.count(static_cast<size_t>(q))) {
                lp.fail("qudit " + std::to_string(q) + " was already measured", index);
            }
            return static_cast<size_t>(q);
        };
        auto power = [&](size_t index) -> uint32_t {
            if (index >= tokens.size()) {
                return 1;
            }
            int64_t k = lp.integer(index, "power");
            int64_t r = ((k % c.p) + c.p) % c.p;
            if (r == 0) {
                lp.fail("power " + std::to_string(k) + " is trivial modulo " + std::to_string(c.p), index);
            }
            return static_cast<uint32_t>(r);
        };
        auto field_param = [&](size_t index, const char *what) -> uint32_t {
            int64_t v = lp.integer(index, what);
            return static_cast<uint32_t>(((v % c.p) + c.p) % c.p);
        };

        if (head == "F" || head == "FINV" || head == "S" || head == "SINV") {
            lp.expect_arity(1, 2);
            size_t q = qudit(1);
            GateKind kind = head == "F"      ? GateKind::F
                            : head == "FINV" ? GateKind::FINV
                            : head == "S"    ? GateKind::S
                                             : GateKind::SINV;
            uint32_t k = 1;
            if (kind == GateKind::F || kind == GateKind::FINV) {
                // F has order 4 regardless of p.
                if (tokens.size() > 2) {
                    int64_t raw = lp.integer(2, "power");
                    k = static_cast<uint32_t>(((raw % 4) + 4) % 4);
                    if (k == 0) {
                        lp.fail("power " + std::to_string(raw) + " of " + std::string(head) + " is trivial", 2);
                    }
                }
            } else {
                k = power(2);
            }
            c.ops.push_back(CliffordGate{kind, q, 0, k});
        } else if (head == "X" || head == "Z") {
            lp.expect_arity(1, 2);
            size_t q = qudit(1);
            uint32_t k = power(2);
            c.ops.push_back(head == "X" ? CliffordGate::x(q, k) : CliffordGate::z(q, k));
        } else if (head == "SUM") {
            lp.expect_arity(2, 3);
            size_t ctrl = qudit(1);
            size_t tgt = qudit(2);
            if (ctrl == tgt) {
                lp.fail("SUM control and target must differ", 2);
            }
            c.ops.push_back(CliffordGate::sum(ctrl, tgt, power(3)));
        } else if (head == "UV") {
            lp.expect_arity(4, 4);
            size_t q = qudit(1);
            MagicParams mp{field_param(2, "z'"), field_param(3, "gamma'"), field_param(4, "epsilon'")};
            if (mp.gamma == 0) {
                lp.fail("gamma' must be nonzero modulo " + std::to_string(c.p), 3);
            }
            c.ops.push_back(UvGate{q, mp});
        } else if (head == "MEASURE") {
            lp.expect_arity(1, 1);
            size_t q = qudit(1);
            measured.insert(q);
            c.ops.push_back(Measure{q});
        } else {
            lp.fail("unknown instruction '" + std::string(head) + "'", 0);
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!have_header) {
        throw ParseError("missing header 'qudits <n> dim <p>'", line_number == 0 ? 1 : line_number, 1);
    }
    return c;
}

std::string render_circuit(const CircuitIR &c) {
    std::stringstream ss;
    ss << "qudits " << c.n << " dim " << c.p << "\n";
    for (const auto &op : c.ops) {
        if (auto g = std::get_if<CliffordGate>(&op)) {
            ss << gate_str(*g) << "\n";
        } else if (auto u = std::get_if<UvGate>(&op)) {
            ss << "UV " << u->target << " " << u->params.z << " " << u->params.gamma << " " << u->params.epsilon
               << "\n";
        } else {
            ss << "MEASURE " << std::get<Measure>(op).target << "\n";
        }
    }
    return ss.str();
}

}  // namespace qpbc
