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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qladder/circuit.h"
#include "qladder/errors.h"
#include "qladder/jordan_wigner.h"
#include "qladder/protocols.h"
#include "qladder/random.h"
#include "qladder/solver.h"

namespace qladder::cli {

LadderParams LadderOptions::params() const {
    LadderParams p{n, epsilon, gx, gz};
    p.validate();
    return p;
}

namespace {

ExcitationPattern parse_pattern(const std::vector<std::string> &items, int n) {
    ExcitationPattern pattern;
    for (const auto &item : items) {
        try {
            pattern.excited.push_back(parse_ladder_index(item));
        } catch (const DomainError &e) {
            throw DomainError("--excite: " + std::string(e.what()));
        }
    }
    pattern.validate(n);
    return pattern;
}

std::vector<double> time_grid(double t_final, int steps) {
    if (!std::isfinite(t_final) || t_final < 0.0) {
        throw DomainError("--t-final must be finite and >= 0");
    }
    if (steps < 1) {
        throw DomainError("--steps must be >= 1");
    }
    std::vector<double> times;
    for (int i = 0; i <= steps; ++i) {
        times.push_back(t_final * i / steps);
    }
    return times;
}

std::vector<double> lowest_levels(const SparseOperator &h, int levels, std::uint64_t seed) {
    const Index dim = h.dimension();
    if (levels <= 0) {
        return dense_spectrum(h).eigenvalues;
    }
    const int k = static_cast<int>(std::min<Index>(levels, dim));
    std::vector<double> values;
    if (dim <= 512) {
        values = dense_spectrum(h).eigenvalues;
    } else {
        LanczosOptions o;
        o.seed = seed;
        values = lanczos_extremal(h, k, o).eigenvalues;
    }
    values.resize(static_cast<std::size_t>(k));
    return values;
}

std::vector<SectorTag> sectors(int n, std::optional<int> n_up, std::optional<int> n_down) {
    std::vector<SectorTag> out;
    for (int u = 0; u <= n; ++u) {
        for (int d = 0; d <= n; ++d) {
            if ((n_up && *n_up != u) || (n_down && *n_down != d)) {
                continue;
            }
            out.push_back({u, d});
        }
    }
    if (out.empty()) {
        throw DomainError("--n-up/--n-down must lie in [0, n]");
    }
    return out;
}

}  // namespace

int run_spectrum(const SpectrumOptions &o, const Context &ctx, Table &table) {
    const LadderParams p = o.ladder.params();
    table.columns = {"index", "eigenvalue", "sector_nup", "sector_ndown"};
    table.summary = {{"model", o.model}, {"n", static_cast<long long>(p.n)}};

    struct Level {
        double value;
        int nup;
        int ndown;
    };
    std::vector<Level> levels;
    if (o.model == "hqs-xx") {
        if (o.n_up || o.n_down) {
            throw DomainError("--n-up/--n-down: the sigma^x sigma^x ladder does not conserve chain numbers");
        }
        for (double v : lowest_levels(build_hqs_xx(p), o.levels, ctx.seed)) {
            levels.push_back({v, -1, -1});
        }
    } else {
        HubbardParams h;
        if (o.model == "hfh") {
            if (o.mu || o.u || o.t) {
                if (!(o.mu && o.u && o.t)) {
                    throw DomainError("--mu, --u and --t must be given together");
                }
                h = HubbardParams{p.n, *o.mu, *o.u, *o.t};
            } else {
                h = map_params(p);
            }
        }
        for (const SectorTag tag : sectors(p.n, o.n_up, o.n_down)) {
            const SectorBasis basis(p.n, tag.n_up, tag.n_down);
            const SparseOperator op = o.model == "hqs" ? build_hqs(p, basis) : build_hfh(h, basis);
            for (double v : lowest_levels(op, o.levels, ctx.seed)) {
                levels.push_back({v, tag.n_up, tag.n_down});
            }
        }
    }
    std::stable_sort(levels.begin(), levels.end(), [](const Level &a, const Level &b) { return a.value < b.value; });
    long long index = 0;
    for (const Level &l : levels) {
        table.add_row({index++, l.value, static_cast<long long>(l.nup), static_cast<long long>(l.ndown)});
    }
    return 0;
}

int run_evolve(const EvolveOptions &o, const Context &, Table &table) {
    const LadderParams p = o.ladder.params();
    const int n = p.n;
    const ExcitationPattern pattern = parse_pattern(o.excite, n);
    const SectorTag tag = pattern.sector();
    const SectorBasis basis(n, tag.n_up, tag.n_down);
    const SparseOperator h = build_hqs(p, basis);
    const std::vector<double> times = o.times.empty() ? time_grid(o.t_final, o.steps) : o.times;
    KrylovOptions k;
    k.krylov_dimension = o.krylov_dim;
    k.tolerance = o.tolerance;
    const EvolutionResult r = krylov_evolve(h, prepare_product_state(pattern, basis), times, k);

    std::vector<std::string> names = o.observables;
    if (names.empty()) {
        for (int q = 1; q <= 2 * n; ++q) {
            names.push_back("z:" + to_string(delinearize(q, n)));
        }
    }
    struct Column {
        char kind;
        int qubit;
    };
    std::vector<Column> cols;
    table.columns = {"time"};
    for (const auto &name : names) {
        Column c{0, 0};
        if ((name.rfind("z:", 0) == 0 || name.rfind("n:", 0) == 0) && name.size() > 2) {
            c.kind = name[0];
            try {
                c.qubit = linearize(parse_ladder_index(name.substr(2)), n);
            } catch (const DomainError &e) {
                throw DomainError("--observables: " + name + ": " + e.what());
            }
        } else if (name == "N_up") {
            c.kind = 'U';
        } else if (name == "N_down") {
            c.kind = 'D';
        } else if (name == "energy") {
            c.kind = 'E';
        } else if (name == "norm") {
            c.kind = 'N';
        } else {
            throw DomainError("--observables: unknown observable '" + name + "'");
        }
        cols.push_back(c);
        table.columns.push_back(name);
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        const StateVector &s = r.states[i];
        const std::vector<double> occ = occupations(s, n, &basis);
        std::vector<Cell> row{times[i]};
        for (const Column &c : cols) {
            double v = 0.0;
            switch (c.kind) {
                case 'z':
                    v = 2.0 * occ[static_cast<std::size_t>(c.qubit - 1)] - s.amplitudes.squaredNorm();
                    break;
                case 'n':
                    v = occ[static_cast<std::size_t>(c.qubit - 1)];
                    break;
                case 'U':
                case 'D':
                    for (int j = 0; j < n; ++j) {
                        v += occ[static_cast<std::size_t>(c.kind == 'U' ? j + n : j)];
                    }
                    break;
                case 'E':
                    v = expectation(h, s.amplitudes).real();
                    break;
                default:
                    v = s.norm();
            }
            row.emplace_back(v);
        }
        table.add_row(std::move(row));
    }
    table.summary = {{"sector_nup", static_cast<long long>(tag.n_up)},
                     {"sector_ndown", static_cast<long long>(tag.n_down)},
                     {"krylov_dimension", static_cast<long long>(r.krylov_dimension)},
                     {"steps", static_cast<long long>(r.steps)},
                     {"error_estimate", r.error_estimate}};
    return 0;
}

int run_map_params(const MapOptions &o, const Context &, Table &table) {
    if (o.inverse) {
        const LadderParams q = unmap_params(HubbardParams{o.n, o.mu, o.u, o.t});
        table.columns = {"epsilon", "gx", "gz"};
        table.add_row({q.epsilon.front(), q.gx.front(), q.gz.front()});
        return 0;
    }
    const LadderParams q = LadderParams::uniform(o.n, o.epsilon, o.gx, o.gz);
    const HubbardParams h = map_params(q);
    table.columns = {"mu", "u", "t", "offset"};
    table.add_row({h.mu, h.u, h.t, spectral_offset(q)});
    return 0;
}

namespace {

std::vector<double> expand_list(const std::vector<double> &v, std::size_t full, const char *flag) {
    if (v.size() == full) {
        return v;
    }
    if (v.size() == 1) {
        return std::vector<double>(full, v.front());
    }
    throw DomainError(std::string(flag) + " must hold 1 or " + std::to_string(full) + " values");
}

double rate_factor(const std::string &unit, const std::string &rate_unit) {
    if (rate_unit == "same") {
        return 1.0;
    }
    if (unit != "GHz") {
        throw DomainError("--decoherence-unit " + rate_unit + " requires --unit GHz");
    }
    if (rate_unit == "Hz") {
        return 1e-9;
    }
    if (rate_unit == "kHz") {
        return 1e-6;
    }
    if (rate_unit == "MHz") {
        return 1e-3;
    }
    return 1.0;
}

}  // namespace

int run_circuit(const CircuitOptions &o, const Context &ctx, Table &table) {
    using namespace circuit;
    if (o.n < 1) {
        throw DomainError("--n must be >= 1");
    }
    const auto q = static_cast<std::size_t>(2 * o.n);
    const auto ec = expand_list(o.e_c, q, "--e-c");
    const auto ej = expand_list(o.e_j, q, "--e-j");
    const auto el = expand_list(o.e_l, q, "--e-l");
    const auto phi = expand_list(o.phi_e, q, "--phi-e");
    DeviceChain d;
    d.n = o.n;
    for (std::size_t i = 0; i < q; ++i) {
        d.transmons.push_back({ec[i], ej[i], el[i], phi[i]});
    }
    for (double k : expand_list(o.k_m, static_cast<std::size_t>(o.n), "--k-m")) {
        d.rung_couplers.push_back({k, 0.0});
    }
    if (o.n > 1) {
        d.chain_couplers = expand_list(o.cx, static_cast<std::size_t>(2 * (o.n - 1)), "--cx");
    }
    const double rate = o.decoherence * rate_factor(ctx.unit, o.decoherence_unit);
    const FeasibilityReport r = circuit_to_hubbard(d, rate, o.threshold);
    for (const auto &w : r.warnings) {
        *ctx.err << "qladder circuit: warning: " << w << "\n";
    }

    table.columns = {"quantity", "value"};
    const LadderParams &p = r.ladder;
    if (r.hubbard) {
        table.add_row({std::string("epsilon"), p.epsilon.front()});
        table.add_row({std::string("gx"), p.gx.front()});
        table.add_row({std::string("gz"), p.gz.front()});
        table.add_row({std::string("mu"), r.hubbard->mu});
        table.add_row({std::string("u"), r.hubbard->u});
        table.add_row({std::string("t"), r.hubbard->t});
    } else {
        for (int i = 1; i <= 2 * p.n; ++i) {
            table.add_row({"epsilon[" + to_string(delinearize(i, p.n)) + "]", p.epsilon_at(i)});
        }
        for (int j = 1; j <= p.n; ++j) {
            table.add_row({"gz[" + std::to_string(j) + "]", p.gz_at(j)});
        }
        for (Chain chain : {Chain::down, Chain::up}) {
            for (int b = 1; b < p.n; ++b) {
                table.add_row({"gx[" + std::to_string(b) + to_string(chain).substr(0, 1) + "]", p.gx_at(b, chain)});
            }
        }
    }
    table.add_row({std::string("decoherence_rate"), r.decoherence_rate});
    table.add_row({std::string("ratio"), r.ratio});
    table.add_row({std::string("feasible"), static_cast<long long>(r.feasible ? 1 : 0)});
    for (const auto &c : r.couplings) {
        table.add_row({"ratio:" + c.name, c.ratio});
        table.add_row({"above_linewidth:" + c.name, static_cast<long long>(c.above_linewidth ? 1 : 0)});
    }
    if (o.numeric_gz) {
        ZzOptions zo;
        zo.model = o.zz_model == "full" ? ZzModel::full_cosine : ZzModel::pre_displacement;
        zo.truncation = o.truncation;
        for (int j = 1; j <= o.n; ++j) {
            const auto &up = d.transmons[static_cast<std::size_t>(linearize({j, Chain::up}, o.n) - 1)];
            const auto &down = d.transmons[static_cast<std::size_t>(linearize({j, Chain::down}, o.n) - 1)];
            const ZzReport z = effective_gz_numeric(up, down, d.rung_couplers[static_cast<std::size_t>(j - 1)], zo);
            const std::string tag = "[" + std::to_string(j) + "]";
            table.add_row({"gz_numeric" + tag, z.gz_numeric});
            table.add_row({"gz_analytic" + tag, z.gz_analytic});
            table.add_row({"gz_relative_error" + tag, z.relative_error});
        }
    }
    return 0;
}

int run_ut_curve(const UtOptions &o, const Context &, Table &table) {
    using namespace circuit;
    const std::vector<UtPoint> curve = ut_curve(o.gamma, ut_grid(o.points));
    const bool window = o.max_phi.has_value() || o.linewidth.has_value();
    table.columns = {"phi_e", "u_over_t", "closed_form"};
    AccessibleWindow w;
    if (window) {
        table.columns.emplace_back("gz");
        table.columns.emplace_back("accessible");
        w.max_phi_e = o.max_phi.value_or(std::numbers::pi);
        w.linewidth = o.linewidth.value_or(0.0);
        w.min_gz_over_linewidth = o.min_gz_ratio;
    }
    double worst = 0.0;
    for (const UtPoint &pt : curve) {
        worst = std::max(worst, std::abs(pt.u_over_t - pt.closed_form) / std::max(1.0, std::abs(pt.closed_form)));
        std::vector<Cell> row{pt.phi_e, pt.u_over_t, pt.closed_form};
        if (window) {
            const TransmonSpec t{o.e_c, o.e_j, o.e_l, pt.phi_e};
            const double gz = gz_from_circuit(t, t, CouplerSpec{o.k_m, 0.0});
            row.emplace_back(gz);
            row.emplace_back(static_cast<long long>(accessible(w, pt.phi_e, gz) ? 1 : 0));
        }
        table.add_row(std::move(row));
    }
    table.summary = {{"gamma", o.gamma}, {"max_relative_difference", worst}};
    return 0;
}

namespace {

double equivalence_deviation(const LadderParams &q) {
    const HubbardParams h = map_params(q);
    const double e0 = spectral_offset(q);
    double worst = 0.0;
    for (int u = 0; u <= q.n; ++u) {
        for (int d = 0; d <= q.n; ++d) {
            const SectorBasis basis(q.n, u, d);
            const auto a = dense_spectrum(build_hqs(q, basis)).eigenvalues;
            const auto b = dense_spectrum(build_hfh(h, basis)).eigenvalues;
            for (std::size_t i = 0; i < a.size(); ++i) {
                worst = std::max(worst, std::abs(a[i] - (b[i] + e0)));
            }
        }
    }
    return worst;
}

}  // namespace

int run_verify(const VerifyOptions &o, const Context &ctx, Table &table) {
    const LadderParams raw = o.ladder.params();
    const auto uniform = raw.uniformized();
    if (!uniform) {
        throw DomainError("verify requires uniform --epsilon, --gx and --gz");
    }
    const LadderParams p = *uniform;
    const int n = p.n;
    table.columns = {"check", "value", "tolerance", "status"};
    int failures = 0;
    const auto check = [&](const std::string &name, double value, double tol) {
        const bool ok = std::isfinite(value) && value <= tol;
        failures += ok ? 0 : 1;
        table.add_row({name, value, tol, std::string(ok ? "pass" : "fail")});
    };
    const auto info = [&](const std::string &name, double value) {
        table.add_row({name, value, 0.0, std::string("info")});
    };

    check("equivalence", equivalence_deviation(p), o.tol_spectrum);
    double random_worst = 0.0;
    for (int i = 0; i < o.random_triples; ++i) {
        Rng rng(derive_seed(ctx.seed, static_cast<std::uint64_t>(i)));
        const double eps = rng.uniform(0.5, 1.5);
        const double gx = rng.uniform(-0.5, 0.5);
        const double gz = rng.uniform(-0.5, 0.5);
        random_worst = std::max(random_worst, equivalence_deviation(LadderParams::uniform(n, eps, gx, gz)));
    }
    if (o.random_triples > 0) {
        check("equivalence_random", random_worst, o.tol_spectrum);
    }
    if (2 * n <= 12) {
        check("fermion_algebra", jw::check_algebra(n).max_deviation, o.tol_algebra);
    }
    if (2 * n <= 12) {
        const SymmetryReport s = check_symmetries(p);
        check("commutator_n_up", s.commutator_up, o.tol_symmetry);
        check("commutator_n_down", s.commutator_down, o.tol_symmetry);
        check("chain_swap", s.swap_violation, o.tol_symmetry);
        info("translation_spread", s.translation_spread);
    } else {
        check("conservation_structural", structural_number_violation(hqs_terms(p), n), 0.0);
    }

    const std::vector<double> times = time_grid(o.t_final, o.steps);
    TightBindingOptions tb;
    tb.times = times;
    const TightBindingReport t = tight_binding_experiment(p, tb);
    check("tight_binding_spectrum", t.spectral_deviation, o.tol_spectrum);
    check("tight_binding_dynamics", t.dynamics_deviation, o.tol_dynamics);
    double drift = t.number_drift;
    if (n >= 2) {
        const int cut = std::max(1, n / 2);
        const ExcitationPattern pattern{{{1, Chain::down}, {1, Chain::up}}};
        const PartitionReport pr = partition_experiment(p, cut, pattern, times);
        check("partition_leakage", pr.leakage, o.tol_leakage);
        check("partition_left_block", pr.left_block_deviation, o.tol_leakage);
        check("partition_right_block", pr.right_block_deviation, o.tol_leakage);
        drift = std::max(drift, pr.number_drift);
    }
    check("number_drift", drift, 1e-8);

    table.summary = {{"n", static_cast<long long>(n)}, {"failures", static_cast<long long>(failures)}};
    if (failures > 0) {
        *ctx.err << "qladder verify: " << failures << " check(s) failed\n";
        return 2;
    }
    return 0;
}

int run_disorder(const DisorderOptions &o, const Context &ctx, Table &table) {
    const LadderParams base = o.ladder.params();
    DisorderSpec d;
    d.epsilon_spread = o.eps_spread;
    d.gx_spread = o.gx_spread;
    d.gz_spread = o.gz_spread;
    d.seed = ctx.seed;
    d.distribution = o.distribution == "uniform" ? Distribution::uniform : Distribution::gaussian;

    DisorderObservable obs;
    obs.kind = o.experiment == "dynamics" ? DisorderExperiment::dynamics : DisorderExperiment::spectrum;
    obs.pattern = parse_pattern(o.excite.empty() ? std::vector<std::string>{"1d", "1u"} : o.excite, base.n);
    obs.levels = o.levels;
    if (obs.kind == DisorderExperiment::dynamics) {
        obs.times = time_grid(o.t_final, o.steps);
    }
    const DisorderTable r = disorder_sweep(base, d, obs, o.samples, o.threads);
    table.columns = {"sample", "deviation", "conservation_violation"};
    for (const auto &s : r.samples) {
        table.add_row({static_cast<long long>(s.index), s.deviation, s.conservation_violation});
    }
    table.summary = {{"experiment", o.experiment},
                     {"mean_deviation", r.mean_deviation},
                     {"std_deviation", r.std_deviation},
                     {"max_conservation_violation", r.max_conservation_violation},
                     {"conservation_method", r.conservation_method}};
    return 0;
}

}  // namespace qladder::cli
