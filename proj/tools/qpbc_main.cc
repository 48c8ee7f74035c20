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

// qpbc: command-line front end. Every subcommand writes one JSON document
// (or circuit text where requested) to stdout or --out.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qpbc/circuit.h"
#include "qpbc/compiler.h"
#include "qpbc/emitter.h"
#include "qpbc/errors.h"
#include "qpbc/gadget.h"
#include "qpbc/hybrid.h"
#include "qpbc/json_io.h"
#include "qpbc/magic_analysis.h"
#include "qpbc/statevector.h"

namespace {

using namespace qpbc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Common {
    uint64_t seed = 0;
    size_t workers = 1;
    std::string out;
    bool pretty = false;
    size_t oracle_limit = 0;
    uint64_t enumeration_limit = kDefaultEnumerationLimit;
    std::string cache_dir;
    std::vector<uint32_t> magic;  // z' gamma' epsilon'
};

// A failure that should exit with the usage code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string current_file;

std::string read_input(const std::string &path) {
    current_file = path;
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open input file " + path);
    }
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string &text) {
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return c == '{';
        }
    }
    return false;
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

// Circuit text or any circuit-like JSON document.
struct Document {
    std::string format;  // "text" or a JSON format name
    std::string text;
    Json json;
};

Document load(const std::string &path) {
    Document d;
    d.text = read_input(path);
    if (looks_like_json(d.text)) {
        d.json = parse_json(d.text);
        d.format = document_format(d.json);
    } else {
        d.format = "text";
    }
    return d;
}

CircuitIR as_circuit(const Document &d) {
    if (d.format == "text") {
        return parse_circuit(d.text);
    }
    return circuit_from_json(d.json);
}

GadgetizedCircuit as_gadgetized(const Document &d) {
    if (d.format == kGadgetizedFormat) {
        return gadgetized_from_json(d.json);
    }
    return gadgetize(as_circuit(d));
}

MagicParams magic_params(const Common &c, uint32_t p) {
    if (c.magic.empty()) {
        return standard_magic_params(p);
    }
    if (c.magic.size() != 3) {
        throw UsageError("--magic takes three values: z' gamma' epsilon'");
    }
    MagicParams m{c.magic[0] % p, c.magic[1] % p, c.magic[2] % p};
    validate_magic_params(p, m);
    return m;
}

RomOptions rom_options(const Common &c) {
    RomOptions o;
    o.enumeration_limit = c.enumeration_limit;
    o.cache_dir = c.cache_dir;
    return o;
}

void flatten(const Json &j, const std::string &prefix, std::ostream &out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else {
        out << prefix << ": " << j.dump() << "\n";
    }
}

void emit_output(const Common &c, const std::string &body) {
    if (c.out.empty() || c.out == "-") {
        std::cout << body;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        throw FormatError("cannot write " + c.out);
    }
    f << body;
}

void emit_json(const Common &c, const Json &j) {
    if (c.pretty && j.is_object()) {
        std::ostringstream ss;
        flatten(j, "", ss);
        emit_output(c, ss.str());
        return;
    }
    emit_output(c, j.dump(2) + "\n");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_error(const std::string &kind, const std::string &message, const Json &location) {
    Json e{{"error", kind}, {"message", message}, {"location", location}};
    std::cerr << e.dump() << "\n";
}

int run(int argc, char **argv) {
    CLI::App app{"qpbc: Pauli-based computation toolkit for odd-prime qudits"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "Root seed for all random stages")->capture_default_str();
    app.add_option("--workers", common.workers, "Worker threads for sampling")->check(CLI::PositiveNumber);
    app.add_option("--out", common.out, "Output path (default stdout)");
    app.add_flag("--pretty", common.pretty, "Print reports as key: value lines");
    app.add_option("--oracle-limit", common.oracle_limit, "Dense simulator dimension cap (QPBC_ORACLE_LIMIT)");
    app.add_option("--enumeration-limit", common.enumeration_limit, "Stabilizer enumeration size cap");
    app.add_option("--cache-dir", common.cache_dir, "Directory for stabilizer enumeration caches");
    app.add_option("--magic", common.magic, "Magic gate parameters z' gamma' epsilon' (default 1 p-1 0)")
        ->expected(3);

    std::string input;
    std::string format = "json";

    auto *parse = app.add_subcommand("parse", "Validate a circuit and echo its IR");
    parse->add_option("input", input, "Circuit file ('-' for stdin)")->required();
    parse->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto *gadget = app.add_subcommand("gadgetize", "Replace every U_v by a magic-state gadget");
    gadget->add_option("input", input, "Circuit file")->required();

    auto *compile = app.add_subcommand("compile", "Reduce to a standard PBC and record the transcript");
    compile->add_option("input", input, "Circuit, gadgetized or program file")->required();

    int method = 1;
    bool optimize_k = false;
    auto *emit = app.add_subcommand("emit", "Emit an adaptive circuit for a standard PBC");
    emit->add_option("input", input, "Transcript or program file")->required();
    emit->add_option("--method", method, "1: shared ancilla, 2: GHZ ancillas")->check(CLI::IsMember({1, 2}));
    emit->add_flag("--optimize-k", optimize_k, "Rescale observables to minimize SUM count");
    emit->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    size_t ghz_t = 0;
    uint32_t p = 3;
    auto *ghz = app.add_subcommand("ghz", "Constant-depth GHZ preparation circuit");
    ghz->add_option("--t", ghz_t, "Number of qudits")->required();
    ghz->add_option("--p", p, "Qudit dimension")->required();
    ghz->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto *simulate = app.add_subcommand("simulate", "Exact outcome distribution from the dense simulator");
    simulate->add_option("input", input, "Circuit, gadgetized, adaptive or program file")->required();

    size_t copies = 1;
    auto *rom_cmd = app.add_subcommand("rom", "Robustness of magic of |T_v> copies");
    rom_cmd->add_option("--p", p, "Qudit dimension")->required();
    rom_cmd->add_option("--copies", copies, "Number of copies")->required()->check(CLI::PositiveNumber);

    double alpha = 0.5;
    auto *entropy = app.add_subcommand("entropy", "Stabilizer Renyi entropy and st-norm of |T_v> copies");
    entropy->add_option("--p", p, "Qudit dimension")->required();
    entropy->add_option("--alpha", alpha, "Renyi order (not 1)")->capture_default_str();
    entropy->add_option("--copies", copies, "Number of copies")->check(CLI::PositiveNumber);

    auto *bounds = app.add_subcommand("bounds", "Upper (RoM) and lower (Renyi) sampling exponents");
    bounds->add_option("--p", p, "Qudit dimension")->required();
    bounds->add_option("--copies", copies, "Number of copies")->required()->check(CLI::PositiveNumber);

    size_t k = 0;
    uint64_t samples = 0;
    bool plan = false;
    bool exhaustive = false;
    bool conservative = false;
    bool with_exact = false;
    double eps = 0.05;
    double q_fail = 0.05;
    auto *hybrid = app.add_subcommand("hybrid", "Estimate q0 with k virtual qudits");
    hybrid->add_option("input", input, "Program or transcript file")->required();
    hybrid->add_option("--k", k, "Number of virtual qudits")->required();
    auto *samples_opt = hybrid->add_option("--samples", samples, "Number of samples");
    auto *plan_opt = hybrid->add_flag("--plan", plan, "Choose the sample count from --eps and --q-fail");
    auto *exh_opt = hybrid->add_flag("--exhaustive", exhaustive, "Exact expectation over every branch");
    samples_opt->excludes(plan_opt)->excludes(exh_opt);
    plan_opt->excludes(exh_opt);
    hybrid->add_option("--eps", eps, "Target accuracy")->capture_default_str();
    hybrid->add_option("--q-fail", q_fail, "Failure probability")->capture_default_str();
    hybrid->add_flag("--conservative", conservative, "Plan with the wider l1^2 eta interval");
    hybrid->add_flag("--exact", with_exact, "Also report the dense q0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        print_error("UsageError", e.what(), nullptr);
        return kExitUsage;
    }
    if (common.oracle_limit > 0) {
        setenv("QPBC_ORACLE_LIMIT", std::to_string(common.oracle_limit).c_str(), 1);
    }

    if (*parse) {
        CircuitIR c = as_circuit(load(input));
        if (format == "text") {
            emit_output(common, render_circuit(c));
        } else {
            emit_json(common, circuit_to_json(c));
        }
    } else if (*gadget) {
        emit_json(common, gadgetized_to_json(as_gadgetized(load(input))));
    } else if (*compile) {
        Document d = load(input);
        Rng rng = stage_rng(common.seed, "compile");
        Transcript t;
        if (d.format == kProgramFormat) {
            HybridProgram prog = program_from_json(d.json);
            std::vector<MagicParams> magic(prog.t, prog.params);
            t = run_session(session_program(prog.p, magic, prog.observables),
                            std::make_unique<DenseBackend>(prog.p, magic), rng);
        } else {
            GadgetizedCircuit g = as_gadgetized(d);
            t = run_session(g, std::make_unique<DenseBackend>(g.p, g.magic), rng);
        }
        emit_json(common, transcript_to_json(t));
    } else if (*emit) {
        Document d = load(input);
        uint32_t pp;
        size_t t;
        std::vector<PauliObservable> program;
        std::vector<MagicParams> magic;
        if (d.format == kTranscriptFormat) {
            Transcript tr = transcript_from_json(d.json);
            pp = tr.p;
            t = tr.t;
            program = tr.magic_program();
            magic = tr.magic;
        } else if (d.format == kProgramFormat) {
            HybridProgram prog = program_from_json(d.json);
            pp = prog.p;
            t = prog.t;
            program = prog.observables;
            magic.assign(t, prog.params);
        } else {
            throw FormatError("emit reads a transcript or program document, not " + d.format);
        }
        AdaptiveCircuit c;
        if (program.empty()) {
            c.p = pp;
            c.comp_wires = t;
        } else {
            EmitOptions o{optimize_k};
            c = method == 1 ? emit_method1(program, o) : emit_method2(program, o);
        }
        c.inputs.assign(c.wires(), std::nullopt);
        for (size_t w = 0; w < t; w++) {
            c.inputs[w] = magic[w];
        }
        if (format == "text") {
            emit_output(common, render_adaptive(c));
        } else {
            Json j = adaptive_to_json(c);
            GateStats s = stats(c);
            j["stats"] = Json{{"sum_count", s.sum_count}, {"depth", s.depth}};
            emit_json(common, j);
        }
    } else if (*ghz) {
        AdaptiveCircuit c = ghz_prep_circuit(ghz_t, p);
        if (format == "text") {
            emit_output(common, render_adaptive(c));
        } else {
            Json j = adaptive_to_json(c);
            GateStats s = stats(c);
            j["stats"] = Json{{"sum_count", s.sum_count}, {"depth", s.depth}};
            emit_json(common, j);
        }
    } else if (*simulate) {
        Document d = load(input);
        Distribution dist;
        uint32_t pp;
        if (d.format == kAdaptiveFormat) {
            AdaptiveCircuit c = adaptive_from_json(d.json);
            pp = c.p;
            dist = distribution(c);
        } else if (d.format == kGadgetizedFormat) {
            GadgetizedCircuit g = gadgetized_from_json(d.json);
            pp = g.p;
            dist = distribution(g);
        } else if (d.format == kProgramFormat) {
            HybridProgram prog = program_from_json(d.json);
            pp = prog.p;
            dist = program_distribution(prog);
        } else {
            CircuitIR c = as_circuit(d);
            pp = c.p;
            dist = distribution(c);
        }
        emit_json(common, Json{{"format", "qpbc.distribution"},
                               {"source", d.format == "text" ? std::string(kCircuitFormat) : d.format},
                               {"p", pp},
                               {"distribution", distribution_to_json(dist)}});
    } else if (*rom_cmd) {
        MagicParams mp = magic_params(common, p);
        RomOptions o = rom_options(common);
        auto t0 = std::chrono::steady_clock::now();
        auto basis = stabilizer_basis(p, copies, o);
        double t_enum = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        Eigen::VectorXcd psi = tensor_power(magic_state_vector(p, mp), copies);
        RomResult r = rom(psi * psi.adjoint(), basis, o);
        double t_lp = seconds_since(t1);
        double upper = 2.0 / static_cast<double>(copies) * std::log(r.value) / std::log(static_cast<double>(p));
        emit_json(common, Json{{"p", p},
                               {"n", copies},
                               {"magic", magic_to_json(mp)},
                               {"rom", r.value},
                               {"residual", r.residual},
                               {"states", basis.size()},
                               {"exponents", Json{{"rom_upper_exponent", upper}}},
                               {"timings", Json{{"enumeration_s", t_enum}, {"lp_s", t_lp}}}});
    } else if (*entropy) {
        MagicParams mp = magic_params(common, p);
        auto t0 = std::chrono::steady_clock::now();
        Eigen::VectorXcd psi = tensor_power(magic_state_vector(p, mp), copies);
        double m = renyi_entropy(psi, alpha, p);
        double d = st_norm(p, psi * psi.adjoint());
        emit_json(common, Json{{"p", p},
                               {"n", copies},
                               {"magic", magic_to_json(mp)},
                               {"entropy", Json{{"alpha", alpha}, {"value", m}}},
                               {"st_norm", d},
                               {"timings", Json{{"total_s", seconds_since(t0)}}}});
    } else if (*bounds) {
        MagicParams mp = magic_params(common, p);
        auto t0 = std::chrono::steady_clock::now();
        BoundReport b = bound_report(p, copies, mp, rom_options(common));
        emit_json(common, Json{{"p", p},
                               {"n", copies},
                               {"magic", magic_to_json(mp)},
                               {"rom", b.rom},
                               {"exponents", Json{{"rom_upper_exponent", b.rom_upper_exponent},
                                                  {"renyi_lower_exponent", b.renyi_lower_exponent}}},
                               {"timings", Json{{"total_s", seconds_since(t0)}}}});
    } else if (*hybrid) {
        if (!plan && !exhaustive && samples == 0) {
            throw UsageError("hybrid needs --samples N, --plan or --exhaustive");
        }
        Document d = load(input);
        HybridProgram prog;
        if (d.format == kTranscriptFormat) {
            Transcript tr = transcript_from_json(d.json);
            prog.p = tr.p;
            prog.t = tr.t;
            prog.observables = tr.magic_program();
            if (tr.magic.empty()) {
                throw FormatError("transcript has no magic qudits");
            }
            prog.params = tr.magic.front();
            for (const auto &m : tr.magic) {
                if (!(m == prog.params)) {
                    throw FormatError("hybrid sampling needs identical magic states on every qudit");
                }
            }
        } else {
            prog = program_from_json(d.json);
        }
        if (k > prog.t) {
            throw UsageError("--k exceeds the number of magic qudits");
        }
        Decomposition dec = decompose_magic(prog.p, k, prog.params, DecompositionMode::Optimal, rom_options(common));
        HybridOptions o;
        o.seed = common.seed;
        o.workers = common.workers;
        o.q_fail = q_fail;
        o.conservative_range = conservative;
        o.exhaustive = exhaustive;
        o.samples = plan ? plan_samples(eps, q_fail, dec.l1, prog.p, conservative) : samples;
        HybridReport r = hybrid_estimate(prog, dec, o);
        Json j{{"p", r.p},
               {"t", r.t},
               {"k", r.k},
               {"l1", r.l1},
               {"N", r.samples},
               {"q0_hat", r.q0_hat},
               {"half_width", r.half_width},
               {"seed", r.seed},
               {"backend_qudits", r.max_backend_qudits}};
        if (with_exact) {
            j["q0_exact"] = exact_q0(prog);
        }
        emit_json(common, j);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError &e) {
        print_error("UsageError", e.what(), nullptr);
        return kExitUsage;
    } catch (const ParseError &e) {
        print_error(e.kind(), e.bare_message(),
                    Json{{"file", current_file}, {"line", e.line()}, {"column", e.column()}});
        return kExitInput;
    } catch (const Error &e) {
        bool resource = e.kind() == "OracleTooLarge" || e.kind() == "EnumerationTooLarge";
        print_error(e.kind(), e.what(), current_file.empty() ? Json(nullptr) : Json{{"file", current_file}});
        return resource ? kExitResource : kExitInput;
    } catch (const std::bad_alloc &) {
        print_error("ResourceLimit", "out of memory", nullptr);
        return kExitResource;
    } catch (const std::exception &e) {
        print_error("InternalError", e.what(), nullptr);
        return kExitInput;
    }
}
