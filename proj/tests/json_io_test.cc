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

#include <gtest/gtest.h>

#include "qpbc/errors.h"
#include "test_util.h"

using namespace qpbc;
using namespace qpbc::testing;

TEST(json_io, circuit_round_trip) {
    Rng rng(121);
    for (int trial = 0; trial < 30; trial++) {
        auto c = random_circuit(trial % 2 ? 3 : 5, 2, 2, 2, rng);
        Json j = circuit_to_json(c);
        EXPECT_EQ(document_format(j), kCircuitFormat);
        EXPECT_EQ(circuit_from_json(Json::parse(j.dump())), c);
    }
}

TEST(json_io, gadgetized_round_trip) {
    Rng rng(122);
    for (int trial = 0; trial < 30; trial++) {
        auto g = gadgetize(random_circuit(3, 2, 3, 2, rng));
        Json j = gadgetized_to_json(g);
        EXPECT_EQ(j.at("wires").get<size_t>(), g.wires());
        EXPECT_EQ(gadgetized_from_json(Json::parse(j.dump())), g);
    }
}

TEST(json_io, transcript_round_trip) {
    Rng rng(123);
    for (int trial = 0; trial < 20; trial++) {
        auto g = gadgetize(random_circuit(3, 2, 2, 2, rng));
        auto t = run_session(g, std::make_unique<DenseBackend>(g.p, g.magic), rng);
        Json j = transcript_to_json(t);
        for (const auto &step : j.at("steps")) {
            for (const char *key : {"case", "lambda", "x", "z", "sigma", "source"}) {
                EXPECT_TRUE(step.contains(key)) << key;
            }
        }
        auto back = transcript_from_json(Json::parse(j.dump()));
        EXPECT_EQ(transcript_to_json(back).dump(), j.dump());
        EXPECT_EQ(back.magic_program(), t.magic_program());
    }
}

TEST(json_io, adaptive_round_trip) {
    Rng rng(124);
    for (int trial = 0; trial < 10; trial++) {
        auto prog = random_commuting_program(3, 3, 2, rng);
        for (bool method2 : {false, true}) {
            auto c = method2 ? emit_method2(prog, {true}) : emit_method1(prog);
            c.inputs.assign(c.comp_wires, MagicParams{1, 2, 0});
            Json j = adaptive_to_json(c);
            auto back = adaptive_from_json(Json::parse(j.dump()));
            EXPECT_EQ(adaptive_to_json(back).dump(), j.dump());
            EXPECT_EQ(stats(back), stats(c));
        }
    }
    auto ghz = ghz_prep_circuit(3, 3);
    auto back = adaptive_from_json(adaptive_to_json(ghz));
    EXPECT_LT(total_variation(distribution(back), distribution(ghz)), 1e-12);
}

TEST(json_io, program_round_trip) {
    HybridProgram p;
    p.p = 5;
    p.t = 2;
    p.params = {1, 4, 0};
    p.observables = {PauliObservable(5, 3, {1, 0}, {2, 4}), PauliObservable(5, 0, {0, 1}, {0, 0})};
    auto back = program_from_json(Json::parse(program_to_json(p).dump()));
    EXPECT_EQ(back.p, p.p);
    EXPECT_EQ(back.t, p.t);
    EXPECT_EQ(back.params, p.params);
    EXPECT_EQ(back.observables, p.observables);
}

TEST(json_io, distribution_is_sorted) {
    Distribution d = {{{1, 0}, 0.25}, {{0, 2}, 0.75}};
    Json j = distribution_to_json(d);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0].at("outcomes"), Json::parse("[0, 2]"));
    EXPECT_EQ(j[1].at("probability").get<double>(), 0.25);
}

TEST(json_io, errors) {
    EXPECT_THROW(document_format(Json::parse("{}")), FormatError);
    EXPECT_THROW(circuit_from_json(Json::parse(R"({"format": "qpbc.transcript"})")), FormatError);
    EXPECT_THROW(circuit_from_json(Json::parse(R"({"format": "qpbc.circuit", "p": 3})")), FormatError);
    EXPECT_THROW(gate_from_json(Json::parse(R"({"gate": "H", "target": 0})")), FormatError);
    EXPECT_THROW(pauli_from_json(Json::parse(R"({"lambda": 0, "x": [1], "z": [0, 1]})"), 3), FormatError);
}
