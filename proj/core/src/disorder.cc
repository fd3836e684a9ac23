// Copyright 2026 The qladder Authors
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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "qladder/errors.h"
#include "qladder/protocols.h"
#include "qladder/random.h"
#include "qladder/solver.h"

namespace qladder {

void DisorderSpec::validate() const {
    for (double s : {epsilon_spread, gx_spread, gz_spread}) {
        if (!std::isfinite(s) || s < 0.0) {
            throw DomainError("DisorderSpec: spreads must be finite and >= 0");
        }
    }
}

LadderParams sample_disorder(const LadderParams &base, const DisorderSpec &d, std::uint64_t sample) {
    d.validate();
    LadderParams p = base.expanded();
    Rng rng(derive_seed(d.seed, sample));
    const double half_width = std::sqrt(3.0);
    const auto draw = [&]() {
        return d.distribution == Distribution::gaussian ? rng.normal() : rng.uniform(-half_width, half_width);
    };
    // Every value consumes one draw, so the stream layout does not depend on
    // which spreads are zero.
    for (double &v : p.epsilon) {
        v *= 1.0 + d.epsilon_spread * draw();
    }
    for (double &v : p.gx) {
        v *= 1.0 + d.gx_spread * draw();
    }
    for (double &v : p.gz) {
        v *= 1.0 + d.gz_spread * draw();
    }
    return p;
}

double structural_number_violation(const PauliSum &h, int n) {
    double worst = 0.0;
    for (const PauliString &term : h.terms()) {
        int change[2] = {0, 0};
        int mixing[2] = {0, 0};
        for (const auto &[q, op] : term.factors()) {
            const int c = q > n ? 1 : 0;
            switch (op) {
                case Pauli::Plus:
                    ++change[c];
                    break;
                case Pauli::Minus:
                    --change[c];
                    break;
                case Pauli::X:
                case Pauli::Y:
                    ++mixing[c];
                    break;
                case Pauli::Z:
                    break;
            }
        }
        for (int c = 0; c < 2; ++c) {
            worst = std::max(worst, static_cast<double>(std::abs(change[c]) + mixing[c]));
        }
    }
    return worst;
}

namespace {

std::vector<double> observe(const LadderParams &p, const DisorderObservable &obs) {
    const SectorTag tag = obs.pattern.sector();
    const SectorBasis basis(p.n, tag.n_up, tag.n_down);
    const SparseOperator h = build_hqs(p, basis);
    if (obs.kind == DisorderExperiment::spectrum) {
        const int levels = static_cast<int>(std::min<Index>(obs.levels, basis.dimension()));
        std::vector<double> values;
        if (basis.dimension() <= 512) {
            values = dense_spectrum(h).eigenvalues;
        } else {
            values = lanczos_extremal(h, levels).eigenvalues;
        }
        values.resize(static_cast<std::size_t>(levels));
        return values;
    }
    const EvolutionResult r = krylov_evolve(h, prepare_product_state(obs.pattern, basis), obs.times, obs.krylov);
    std::vector<double> values;
    for (const StateVector &s : r.states) {
        const auto occ = occupations(s, p.n, &basis);
        values.insert(values.end(), occ.begin(), occ.end());
    }
    return values;
}

double conservation(const LadderParams &p, bool commutators) {
    if (!commutators) {
        return structural_number_violation(hqs_terms(p), p.n);
    }
    const SparseOperator h = build_hqs(p);
    return std::max(commutator(h, chain_number(p.n, Chain::up)).max_abs(),
                    commutator(h, chain_number(p.n, Chain::down)).max_abs());
}

}  // namespace

DisorderTable disorder_sweep(const LadderParams &base, const DisorderSpec &d, const DisorderObservable &obs,
                             int samples, int threads) {
    base.validate();
    d.validate();
    obs.pattern.validate(base.n);
    if (samples < 1) {
        throw DomainError("disorder_sweep: samples must be >= 1");
    }
    if (obs.kind == DisorderExperiment::dynamics && obs.times.empty()) {
        throw DomainError("disorder_sweep: dynamics experiment needs at least one time");
    }
    const bool commutators = 2 * base.n <= 16;
    const std::vector<double> clean = observe(base.expanded(), obs);

    DisorderTable table;
    table.conservation_method = commutators ? "commutator" : "structural";
    table.samples.resize(static_cast<std::size_t>(samples));

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= samples) {
                return;
            }
            try {
                const LadderParams p = sample_disorder(base, d, static_cast<std::uint64_t>(i));
                const std::vector<double> values = observe(p, obs);
                DisorderSample s;
                s.index = static_cast<std::uint64_t>(i);
                for (std::size_t k = 0; k < values.size(); ++k) {
                    s.deviation = std::max(s.deviation, std::abs(values[k] - clean[k]));
                }
                s.conservation_violation = conservation(p, commutators);
                table.samples[static_cast<std::size_t>(i)] = s;
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(samples);
            }
        }
    };
    int workers = threads > 0 ? threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    workers = std::min(workers, samples);
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    double sum = 0.0;
    for (const auto &s : table.samples) {
        sum += s.deviation;
        table.max_conservation_violation = std::max(table.max_conservation_violation, s.conservation_violation);
    }
    table.mean_deviation = sum / samples;
    if (samples > 1) {
        double sq = 0.0;
        for (const auto &s : table.samples) {
            sq += (s.deviation - table.mean_deviation) * (s.deviation - table.mean_deviation);
        }
        table.std_deviation = std::sqrt(sq / (samples - 1));
    }
    return table;
}

}  // namespace qladder
