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

#ifndef QPBC_JSON_IO_H
#define QPBC_JSON_IO_H

#include <string>

#include "json.hpp"
#include "qpbc/circuit.h"
#include "qpbc/compiler.h"
#include "qpbc/emitter.h"
#include "qpbc/gadget.h"
#include "qpbc/hybrid.h"
#include "qpbc/statevector.h"

namespace qpbc {

/// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

/// Every document carries a "format" key naming its kind.
inline constexpr const char *kCircuitFormat = "qpbc.circuit";
inline constexpr const char *kGadgetizedFormat = "qpbc.gadgetized";
inline constexpr const char *kTranscriptFormat = "qpbc.transcript";
inline constexpr const char *kAdaptiveFormat = "qpbc.adaptive";
inline constexpr const char *kProgramFormat = "qpbc.program";

/// The "format" key of a document; FormatError when absent.
std::string document_format(const Json &j);

Json pauli_to_json(const PauliObservable &pauli);
PauliObservable pauli_from_json(const Json &j, uint32_t p);

Json magic_to_json(const MagicParams &params);
MagicParams magic_from_json(const Json &j);

Json gate_to_json(const CliffordGate &g);
CliffordGate gate_from_json(const Json &j);

Json circuit_to_json(const CircuitIR &c);
CircuitIR circuit_from_json(const Json &j);

Json gadgetized_to_json(const GadgetizedCircuit &g);
GadgetizedCircuit gadgetized_from_json(const Json &j);

Json transcript_to_json(const Transcript &t);
Transcript transcript_from_json(const Json &j);

Json adaptive_to_json(const AdaptiveCircuit &c);
AdaptiveCircuit adaptive_from_json(const Json &j);

/// A standard PBC: {p, t, params, observables}.
Json program_to_json(const HybridProgram &program);
HybridProgram program_from_json(const Json &j);

/// [{"outcomes": [...], "probability": x}, ...] in key order.
Json distribution_to_json(const Distribution &d);

}  // namespace qpbc

#endif
