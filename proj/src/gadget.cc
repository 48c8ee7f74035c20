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

#include "qpbc/gadget.h"

#include <numeric>

namespace qpbc {

size_t GadgetizedCircuit::final_measure_count() const {
    size_t r = 0;
    for (const auto &e : elements) {
        r += std::holds_alternative<FinalMeasure>(e);
    }
    return r;
}

GadgetizedCircuit gadgetize(const CircuitIR &c) {
    validate_circuit(c);
    GadgetizedCircuit g;
    g.p = c.p;
    g.n = c.n;
    std::vector<size_t> map(c.n);
    std::iota(map.begin(), map.end(), 0);
    g.wire_map_history.push_back(map);

    for (const auto &op : c.ops) {
        if (auto gate = std::get_if<CliffordGate>(&op)) {
            CliffordGate r = *gate;
            r.target = map[gate->target];
            if (gate->is_two_qudit()) {
                r.control = map[gate->control];
            }
            g.elements.push_back(r);
        } else if (auto u = std::get_if<UvGate>(&op)) {
            size_t id = g.magic.size();
            size_t magic_wire = c.n + id;
            size_t data_wire = map[u->target];
            g.magic.push_back(u->params);
            g.elements.push_back(CliffordGate::f(data_wire, 2));
            g.elements.push_back(CliffordGate::sum(magic_wire, data_wire));
            g.elements.push_back(MidMeasure{data_wire, id});
            g.elements.push_back(Correction{magic_wire, id, u->params});
            map[u->target] = magic_wire;
            g.wire_map_history.push_back(map);
        } else {
            size_t q = std::get<Measure>(op).target;
            g.elements.push_back(FinalMeasure{map[q], q});
        }
    }
    return g;
}

}  // namespace qpbc
