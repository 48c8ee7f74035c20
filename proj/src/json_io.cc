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

#include "qpbc/json_io.h"

#include "qpbc/errors.h"

namespace qpbc {

namespace {

template <typename T>
T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing key '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("bad value for '") + key + "': " + e.what());
    }
}

void expect_format(const Json &j, const char *format) {
    std::string f = document_format(j);
    if (f != format) {
        throw FormatError("expected a " + std::string(format) + " document, got " + f);
    }
}

Json rule_to_json(const LinearRule &r) {
    Json terms = Json::array();
    for (const auto &[id, coef] : r.terms) {
        terms.push_back(Json::array({id, coef}));
    }
    return Json{{"constant", r.constant}, {"terms", terms}};
}

LinearRule rule_from_json(const Json &j) {
    LinearRule r;
    r.constant = field<uint32_t>(j, "constant");
    for (const auto &t : field<Json>(j, "terms")) {
        if (!t.is_array() || t.size() != 2) {
            throw FormatError("rule terms are [id, coefficient] pairs");
        }
        r.terms.push_back({t[0].get<size_t>(), t[1].get<uint32_t>()});
    }
    return r;
}

GateKind gate_kind(const std::string &name) {
    for (GateKind k : {GateKind::F, GateKind::FINV, GateKind::S, GateKind::SINV, GateKind::SUM, GateKind::X,
                       GateKind::Z}) {
        if (name == gate_mnemonic(k)) {
            return k;
        }
    }
    throw FormatError("unknown gate '" + name + "'");
}

}  // namespace

std::string document_format(const Json &j) {
    return field<std::string>(j, "format");
}

Json pauli_to_json(const PauliObservable &pauli) {
    return Json{{"lambda", pauli.lambda()}, {"x", pauli.x()}, {"z", pauli.z()}};
}

PauliObservable pauli_from_json(const Json &j, uint32_t p) {
    auto x = field<std::vector<int64_t>>(j, "x");
    auto z = field<std::vector<int64_t>>(j, "z");
    if (x.size() != z.size()) {
        throw FormatError("Pauli x and z parts differ in length");
    }
    return PauliObservable(p, field<int64_t>(j, "lambda"), x, z);
}

Json magic_to_json(const MagicParams &params) {
    return Json{{"z", params.z}, {"gamma", params.gamma}, {"epsilon", params.epsilon}};
}

MagicParams magic_from_json(const Json &j) {
    return MagicParams{field<uint32_t>(j, "z"), field<uint32_t>(j, "gamma"), field<uint32_t>(j, "epsilon")};
}

Json gate_to_json(const CliffordGate &g) {
    Json j{{"op", "gate"}, {"gate", gate_mnemonic(g.kind)}, {"target", g.target}};
    if (g.is_two_qudit()) {
        j["control"] = g.control;
    }
    j["power"] = g.power;
    return j;
}

CliffordGate gate_from_json(const Json &j) {
    CliffordGate g{gate_kind(field<std::string>(j, "gate")), field<size_t>(j, "target"), 0, 1};
    if (g.is_two_qudit()) {
        g.control = field<size_t>(j, "control");
    }
    if (j.contains("power")) {
        g.power = field<uint32_t>(j, "power");
    }
    return g;
}

Json circuit_to_json(const CircuitIR &c) {
    Json ops = Json::array();
    for (const auto &op : c.ops) {
        if (auto g = std::get_if<CliffordGate>(&op)) {
            ops.push_back(gate_to_json(*g));
        } else if (auto u = std::get_if<UvGate>(&op)) {
            ops.push_back(Json{{"op", "uv"}, {"target", u->target}, {"params", magic_to_json(u->params)}});
        } else {
            ops.push_back(Json{{"op", "measure"}, {"target", std::get<Measure>(op).target}});
        }
    }
    return Json{{"format", kCircuitFormat}, {"p", c.p}, {"n", c.n}, {"ops", ops}};
}

CircuitIR circuit_from_json(const Json &j) {
    expect_format(j, kCircuitFormat);
    CircuitIR c;
    c.p = field<uint32_t>(j, "p");
    c.n = field<size_t>(j, "n");
    for (const auto &op : field<Json>(j, "ops")) {
        std::string kind = field<std::string>(op, "op");
        if (kind == "gate") {
            c.ops.push_back(gate_from_json(op));
        } else if (kind == "uv") {
            c.ops.push_back(UvGate{field<size_t>(op, "target"), magic_from_json(field<Json>(op, "params"))});
        } else if (kind == "measure") {
            c.ops.push_back(Measure{field<size_t>(op, "target")});
        } else {
            throw FormatError("unknown circuit op '" + kind + "'");
        }
    }
    validate_circuit(c);
    return c;
}

Json gadgetized_to_json(const GadgetizedCircuit &g) {
    Json magic = Json::array();
    for (const auto &m : g.magic) {
        magic.push_back(magic_to_json(m));
    }
    Json elements = Json::array();
    for (const auto &e : g.elements) {
        if (auto gate = std::get_if<CliffordGate>(&e)) {
            elements.push_back(gate_to_json(*gate));
        } else if (auto mm = std::get_if<MidMeasure>(&e)) {
            elements.push_back(Json{{"op", "mid_measure"}, {"wire", mm->wire}, {"id", mm->id}});
        } else if (auto cc = std::get_if<Correction>(&e)) {
            elements.push_back(Json{
                {"op", "correction"}, {"wire", cc->wire}, {"id", cc->id}, {"params", magic_to_json(cc->params)}});
        } else {
            const auto &fm = std::get<FinalMeasure>(e);
            elements.push_back(Json{{"op", "final_measure"}, {"wire", fm.wire}, {"logical", fm.logical}});
        }
    }
    return Json{{"format", kGadgetizedFormat},
                {"p", g.p},
                {"n", g.n},
                {"wires", g.wires()},
                {"magic", magic},
                {"elements", elements},
                {"wire_map_history", g.wire_map_history}};
}

GadgetizedCircuit gadgetized_from_json(const Json &j) {
    expect_format(j, kGadgetizedFormat);
    GadgetizedCircuit g;
    g.p = field<uint32_t>(j, "p");
    g.n = field<size_t>(j, "n");
    PrimeField f(g.p);
    for (const auto &m : field<Json>(j, "magic")) {
        g.magic.push_back(magic_from_json(m));
        validate_magic_params(g.p, g.magic.back());
    }
    for (const auto &e : field<Json>(j, "elements")) {
        std::string kind = field<std::string>(e, "op");
        if (kind == "gate") {
            CliffordGate gate = gate_from_json(e);
            validate_gate(gate, g.p, g.wires());
            g.elements.push_back(gate);
        } else if (kind == "mid_measure") {
            g.elements.push_back(MidMeasure{field<size_t>(e, "wire"), field<size_t>(e, "id")});
        } else if (kind == "correction") {
            g.elements.push_back(
                Correction{field<size_t>(e, "wire"), field<size_t>(e, "id"), magic_from_json(field<Json>(e, "params"))});
        } else if (kind == "final_measure") {
            g.elements.push_back(FinalMeasure{field<size_t>(e, "wire"), field<size_t>(e, "logical")});
        } else {
            throw FormatError("unknown gadgetized op '" + kind + "'");
        }
    }
    g.wire_map_history = field<std::vector<std::vector<size_t>>>(j, "wire_map_history");
    for (const auto &e : g.elements) {
        size_t wire = std::visit(
            [](const auto &x) -> size_t {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, CliffordGate>) {
                    return x.max_qudit();
                } else {
                    return x.wire;
                }
            },
            e);
        if (wire >= g.wires()) {
            throw IndexError("gadgetized element on wire " + std::to_string(wire) + " of " +
                             std::to_string(g.wires()));
        }
    }
    return g;
}

Json transcript_to_json(const Transcript &t) {
    Json magic = Json::array();
    for (const auto &m : t.magic) {
        magic.push_back(magic_to_json(m));
    }
    Json steps = Json::array();
    for (const auto &s : t.steps) {
        Json step{{"case", s.case_number}};
        Json pj = pauli_to_json(s.front);
        step["lambda"] = pj["lambda"];
        step["x"] = pj["x"];
        step["z"] = pj["z"];
        step["sigma"] = s.sigma;
        step["source"] = source_name(s.source);
        step["mid"] = s.mid;
        step["id"] = s.id;
        steps.push_back(step);
    }
    return Json{{"format", kTranscriptFormat}, {"p", t.p}, {"n", t.n}, {"t", t.t}, {"magic", magic},
                {"steps", steps},              {"outcomes", t.outcomes}};
}

Transcript transcript_from_json(const Json &j) {
    expect_format(j, kTranscriptFormat);
    Transcript t;
    t.p = field<uint32_t>(j, "p");
    t.n = field<size_t>(j, "n");
    t.t = field<size_t>(j, "t");
    for (const auto &m : field<Json>(j, "magic")) {
        t.magic.push_back(magic_from_json(m));
    }
    if (t.magic.size() != t.t) {
        throw FormatError("transcript lists " + std::to_string(t.magic.size()) + " magic states for t = " +
                          std::to_string(t.t));
    }
    for (const auto &s : field<Json>(j, "steps")) {
        TranscriptStep step{field<int>(s, "case"), pauli_from_json(s, t.p), field<uint32_t>(s, "sigma"),
                            OutcomeSource::Derived, field<bool>(s, "mid"), field<size_t>(s, "id")};
        std::string src = field<std::string>(s, "source");
        if (src == "sampled") {
            step.source = OutcomeSource::Sampled;
        } else if (src == "backend") {
            step.source = OutcomeSource::Backend;
        } else if (src != "derived") {
            throw FormatError("unknown outcome source '" + src + "'");
        }
        if (step.front.n() != t.n + t.t) {
            throw FormatError("transcript step acts on the wrong number of wires");
        }
        t.steps.push_back(step);
    }
    t.outcomes = field<std::vector<uint32_t>>(j, "outcomes");
    return t;
}

Json adaptive_to_json(const AdaptiveCircuit &c) {
    Json inputs = Json::array();
    for (const auto &in : c.inputs) {
        inputs.push_back(in ? magic_to_json(*in) : Json(nullptr));
    }
    Json elements = Json::array();
    for (const auto &e : c.elements) {
        if (auto g = std::get_if<CliffordGate>(&e)) {
            elements.push_back(gate_to_json(*g));
        } else if (auto m = std::get_if<AncillaMeasure>(&e)) {
            elements.push_back(Json{{"op", "measure_anc"}, {"wire", m->wire}, {"id", m->id}});
        } else if (auto r = std::get_if<AncillaReset>(&e)) {
            elements.push_back(Json{{"op", "reset"}, {"wire", r->wire}});
        } else if (auto x = std::get_if<ConditionalX>(&e)) {
            elements.push_back(Json{{"op", "cx"}, {"wire", x->wire}, {"rule", rule_to_json(x->power)}});
        } else {
            const auto &cc = std::get<ClassicalCombine>(e);
            elements.push_back(Json{{"op", "ccombine"}, {"output", cc.output}, {"rule", rule_to_json(cc.rule)}});
        }
    }
    Json meta = Json::array();
    for (const auto &m : c.meta) {
        meta.push_back(Json{{"observable", pauli_to_json(m.observable)},
                            {"emitted", pauli_to_json(m.emitted)},
                            {"k", m.k},
                            {"output", m.output}});
    }
    return Json{{"format", kAdaptiveFormat},
                {"p", c.p},
                {"comp_wires", c.comp_wires},
                {"anc_wires", c.anc_wires},
                {"inputs", inputs},
                {"elements", elements},
                {"meta", meta},
                {"measurement_count", c.measurement_count},
                {"output_count", c.output_count}};
}

AdaptiveCircuit adaptive_from_json(const Json &j) {
    expect_format(j, kAdaptiveFormat);
    AdaptiveCircuit c;
    c.p = field<uint32_t>(j, "p");
    PrimeField f(c.p);
    c.comp_wires = field<size_t>(j, "comp_wires");
    c.anc_wires = field<size_t>(j, "anc_wires");
    for (const auto &in : field<Json>(j, "inputs")) {
        if (in.is_null()) {
            c.inputs.push_back(std::nullopt);
        } else {
            c.inputs.push_back(magic_from_json(in));
            validate_magic_params(c.p, *c.inputs.back());
        }
    }
    c.measurement_count = field<size_t>(j, "measurement_count");
    c.output_count = field<size_t>(j, "output_count");
    auto check_rule = [&](const LinearRule &r) {
        for (const auto &t : r.terms) {
            if (t.first >= c.measurement_count) {
                throw IndexError("rule refers to measurement " + std::to_string(t.first));
            }
        }
        return r;
    };
    auto check_wire = [&](size_t w) {
        if (w >= c.wires()) {
            throw IndexError("wire " + std::to_string(w) + " out of range");
        }
        return w;
    };
    for (const auto &e : field<Json>(j, "elements")) {
        std::string kind = field<std::string>(e, "op");
        if (kind == "gate") {
            CliffordGate g = gate_from_json(e);
            validate_gate(g, c.p, c.wires());
            c.elements.push_back(g);
        } else if (kind == "measure_anc") {
            size_t id = field<size_t>(e, "id");
            if (id >= c.measurement_count) {
                throw IndexError("measurement id " + std::to_string(id) + " out of range");
            }
            c.elements.push_back(AncillaMeasure{check_wire(field<size_t>(e, "wire")), id});
        } else if (kind == "reset") {
            c.elements.push_back(AncillaReset{check_wire(field<size_t>(e, "wire"))});
        } else if (kind == "cx") {
            c.elements.push_back(
                ConditionalX{check_wire(field<size_t>(e, "wire")), check_rule(rule_from_json(field<Json>(e, "rule")))});
        } else if (kind == "ccombine") {
            size_t out = field<size_t>(e, "output");
            if (out >= c.output_count) {
                throw IndexError("output " + std::to_string(out) + " out of range");
            }
            c.elements.push_back(ClassicalCombine{out, check_rule(rule_from_json(field<Json>(e, "rule")))});
        } else {
            throw FormatError("unknown adaptive op '" + kind + "'");
        }
    }
    for (const auto &m : field<Json>(j, "meta")) {
        c.meta.push_back(ObservableMeta{pauli_from_json(field<Json>(m, "observable"), c.p),
                                        pauli_from_json(field<Json>(m, "emitted"), c.p), field<uint32_t>(m, "k"),
                                        field<size_t>(m, "output")});
    }
    return c;
}

Json program_to_json(const HybridProgram &program) {
    Json obs = Json::array();
    for (const auto &o : program.observables) {
        obs.push_back(pauli_to_json(o));
    }
    return Json{{"format", kProgramFormat},
                {"p", program.p},
                {"t", program.t},
                {"params", magic_to_json(program.params)},
                {"observables", obs}};
}

HybridProgram program_from_json(const Json &j) {
    expect_format(j, kProgramFormat);
    HybridProgram program;
    program.p = field<uint32_t>(j, "p");
    program.t = field<size_t>(j, "t");
    program.params = magic_from_json(field<Json>(j, "params"));
    validate_magic_params(program.p, program.params);
    for (const auto &o : field<Json>(j, "observables")) {
        program.observables.push_back(pauli_from_json(o, program.p));
        if (program.observables.back().n() != program.t) {
            throw FormatError("program observable acts on the wrong number of qudits");
        }
    }
    return program;
}

Json distribution_to_json(const Distribution &d) {
    Json out = Json::array();
    for (const auto &[outcomes, prob] : d) {
        out.push_back(Json{{"outcomes", outcomes}, {"probability", prob}});
    }
    return out;
}

}  // namespace qpbc
