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

#ifndef QPBC_COMPILER_H
#define QPBC_COMPILER_H

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpbc/gadget.h"
#include "qpbc/pauli.h"
#include "qpbc/rng.h"
#include "qpbc/statevector.h"

namespace qpbc {

/// C_sigma P C_sigma^dagger for the gadget correction on `wire`.
PauliObservable conjugate_through_correction(const PauliObservable &pauli, uint32_t sigma, const MagicParams &params,
                                             size_t wire);

/// A Clifford V that maps the state stabilized by omega^{-a} A to the
/// post-measurement state of M with outcome sigma.
struct VRecord {
    PauliObservable m;
    uint32_t sigma;
    PauliObservable a_op;
    uint32_t a;
    uint32_t phi;  // M A = omega^phi A M, nonzero
};

/// Builds a record, computing phi. Throws InternalInvariantViolation when M and
/// A commute.
VRecord make_vrecord(const PauliObservable &m, uint32_t sigma, const PauliObservable &a_op, uint32_t a);

/// V R V^dagger (closed form).
PauliObservable conjugate_through_v(const PauliObservable &r, const VRecord &v);

/// V^dagger Q V.
PauliObservable conjugate_through_v_inverse(const PauliObservable &q, const VRecord &v);

/// Dense V = (omega^a / sqrt p) sum_k omega^{-k(sigma - a)} M^k A^{-k-1}.
Eigen::MatrixXcd dense_v(const VRecord &v);

/// Measures Pauli observables on the magic register.
class MagicBackend {
   public:
    virtual ~MagicBackend() = default;
    virtual size_t qudits() const = 0;
    /// Exact outcome probabilities, when the backend can provide them.
    virtual std::optional<std::vector<double>> probabilities(const PauliObservable &m) const = 0;
    /// Forces outcome sigma (used by branch enumeration).
    virtual void collapse(const PauliObservable &m, uint32_t sigma) = 0;
    /// Samples an outcome and updates the register.
    virtual uint32_t measure(const PauliObservable &m, Rng &rng) = 0;
    virtual std::unique_ptr<MagicBackend> clone() const = 0;
};

/// State-vector backend holding |T_v> on each magic qudit.
class DenseBackend : public MagicBackend {
   public:
    DenseBackend(uint32_t p, const std::vector<MagicParams> &magic);
    explicit DenseBackend(DenseState state);

    size_t qudits() const override {
        return state_.n();
    }
    std::optional<std::vector<double>> probabilities(const PauliObservable &m) const override;
    void collapse(const PauliObservable &m, uint32_t sigma) override;
    uint32_t measure(const PauliObservable &m, Rng &rng) override;
    std::unique_ptr<MagicBackend> clone() const override;

    const DenseState &state() const {
        return state_;
    }

   private:
    DenseState state_;
};

/// A measurement in a session program: `observable` acts on all wires at its
/// position in the element list.
struct ProgramMeasure {
    PauliObservable observable;
    bool mid;    // gadget measurement (processed before final ones)
    size_t id;   // mid: outcome id; final: output index
};

using ProgramElement = std::variant<CliffordGate, Correction, ProgramMeasure>;

/// Generalized PBC input: n stabilizer wires starting in |0>, followed by one
/// wire per magic state.
struct SessionProgram {
    uint32_t p = 3;
    size_t n = 0;
    std::vector<MagicParams> magic;
    std::vector<ProgramElement> elements;

    size_t wires() const {
        return n + magic.size();
    }
    size_t mid_count() const;
    size_t final_count() const;
};

SessionProgram session_program(const GadgetizedCircuit &g);

/// A standard PBC: observables on the magic wires only, measured in order.
SessionProgram session_program(uint32_t p, const std::vector<MagicParams> &magic,
                               const std::vector<PauliObservable> &observables);

struct ListEntry {
    PauliObservable op;
    uint32_t outcome;
    bool dummy;
};

enum class OutcomeSource { Sampled, Derived, Backend };

const char *source_name(OutcomeSource s);

struct TranscriptStep {
    int case_number;  // 1, 2 or 3
    PauliObservable front;
    uint32_t sigma;
    OutcomeSource source;
    bool mid;
    size_t id;
};

struct Transcript {
    uint32_t p = 3;
    size_t n = 0;
    size_t t = 0;
    std::vector<MagicParams> magic;
    std::vector<TranscriptStep> steps;
    std::vector<uint32_t> outcomes;  // final outcomes by output index

    /// Case-3 fronts restricted to the magic wires: the standard PBC.
    std::vector<PauliObservable> magic_program() const;
};

/// Result of classifying a front observable against the session state.
struct Classification {
    int case_number;
    size_t pivot = 0;            // Case 1: LIST index
    uint32_t derived_sigma = 0;  // Case 2
};

/// Stateful reduction of a generalized PBC to a standard PBC on the magic
/// wires. Copying clones the backend, so branches can be explored.
class Session {
   public:
    Session(uint32_t p, size_t n, size_t t, std::unique_ptr<MagicBackend> backend);
    Session(const Session &other);
    Session &operator=(const Session &other);

    uint32_t p() const {
        return p_;
    }
    const std::vector<ListEntry> &list() const {
        return list_;
    }
    const std::vector<VRecord> &vrecords() const {
        return vs_;
    }
    MagicBackend &backend() {
        return *backend_;
    }

    /// W^dagger M W for the accumulated V's (oldest first).
    PauliObservable through_vs(const PauliObservable &m) const;

    Classification classify(const PauliObservable &front) const;

    /// Applies the classified step with outcome sigma. For Case 3 the backend
    /// must already hold the corresponding post-measurement state.
    void commit(const PauliObservable &front, const Classification &c, uint32_t sigma);

    /// Restriction of a Case-3 front to the magic wires (phase kept). Throws
    /// InternalInvariantViolation if its stabilizer-wire part is not Z-type.
    PauliObservable magic_part(const PauliObservable &front) const;

    /// Classifies, draws or derives sigma, and commits.
    std::pair<Classification, uint32_t> classify_and_execute(const PauliObservable &front, Rng &rng,
                                                             OutcomeSource *source = nullptr);

   private:
    uint32_t p_;
    size_t n_;
    size_t t_;
    std::vector<ListEntry> list_;
    std::vector<VRecord> vs_;
    std::unique_ptr<MagicBackend> backend_;
};

/// Called after every committed step with the session state.
using StepObserver = std::function<void(const Session &, const TranscriptStep &)>;

/// Runs the program: mid measurements in order, then final ones.
Transcript run_session(const SessionProgram &program, std::unique_ptr<MagicBackend> backend, Rng &rng,
                       const StepObserver &observer = {});
Transcript run_session(const GadgetizedCircuit &g, std::unique_ptr<MagicBackend> backend, Rng &rng,
                       const StepObserver &observer = {});

/// Exact distribution over final outcome tuples by exploring every branch
/// (Case 1: weight 1/p; Case 3: dense projector probability).
Distribution enumerate_branches(const SessionProgram &program);
Distribution enumerate_branches(const GadgetizedCircuit &g);

}  // namespace qpbc

#endif
