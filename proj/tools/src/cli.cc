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

#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "commands.h"
#include "qladder/errors.h"
#include "qladder/version.h"

namespace qladder::cli {

namespace {

void add_ladder(CLI::App *sub, LadderOptions &o) {
    sub->add_option("--n", o.n, "Sites per chain")->capture_default_str();
    sub->add_option("--epsilon", o.epsilon, "Qubit energy: one value or 2n values (down chain, then up chain)")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--gx", o.gx, "Exchange: one value or 2(n-1) values (down bonds, then up bonds)")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--gz", o.gz, "Rung coupling: one value or n values")->delimiter(',')->capture_default_str();
}

std::string canonical_config(const CLI::App *sub, const Context &ctx) {
    std::string text = sub->get_name() + "\n";
    for (const CLI::Option *opt : sub->get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") {
            continue;
        }
        std::string value;
        if (opt->count() > 0) {
            for (const auto &r : opt->results()) {
                value += r + ";";
            }
        } else {
            value = opt->get_default_str();
        }
        text += opt->get_lnames().front() + "=" + value + "\n";
    }
    text += "seed=" + std::to_string(ctx.seed) + "\nunit=" + ctx.unit + "\n";
    return text;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Qubit-ladder emulator of the one-dimensional Fermi-Hubbard model", "qladder"};
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "INI configuration file with one section per subcommand");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx;
    ctx.err = &err;
    std::string output;
    std::string format = "csv";
    app.add_option("--output,-o", output, "Output file (default: stdout, or $QLADDER_OUTPUT_DIR/<mode>.<format>)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--seed", ctx.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--unit", ctx.unit, "Energy unit of the run")
        ->check(CLI::IsMember({"dimensionless", "GHz"}))
        ->capture_default_str();

    SpectrumOptions spectrum;
    auto *s_spec = app.add_subcommand("spectrum", "Eigenvalues of H_QS, H_FH or the sigma^x sigma^x ladder");
    add_ladder(s_spec, spectrum.ladder);
    s_spec->add_option("--model", spectrum.model)->check(CLI::IsMember({"hqs", "hfh", "hqs-xx"}))->capture_default_str();
    s_spec->add_option("--mu", spectrum.mu, "Hubbard chemical potential (hfh; default from the ladder map)");
    s_spec->add_option("--u", spectrum.u, "Hubbard on-site energy (hfh)");
    s_spec->add_option("--t", spectrum.t, "Hubbard transfer energy (hfh)");
    s_spec->add_option("--n-up", spectrum.n_up, "Restrict to this up-chain excitation number");
    s_spec->add_option("--n-down", spectrum.n_down, "Restrict to this down-chain excitation number");
    s_spec->add_option("--levels", spectrum.levels, "Lowest levels per sector (0 = all)")->capture_default_str();

    EvolveOptions evolve;
    auto *s_evo = app.add_subcommand("evolve", "Time evolution of a product state under H_QS");
    add_ladder(s_evo, evolve.ladder);
    s_evo->add_option("--excite", evolve.excite, "Excited qubits, e.g. 1u,2d")->delimiter(',');
    s_evo->add_option("--t-final", evolve.t_final)->capture_default_str();
    s_evo->add_option("--steps", evolve.steps, "Uniform output grid 0..t-final")->capture_default_str();
    s_evo->add_option("--times", evolve.times, "Explicit output times (overrides the grid)")->delimiter(',');
    s_evo->add_option("--observables", evolve.observables,
                      "z:<site><u|d>, n:<site><u|d>, N_up, N_down, energy, norm (default: z on every qubit)")
        ->delimiter(',');
    s_evo->add_option("--krylov-dim", evolve.krylov_dim)->capture_default_str();
    s_evo->add_option("--tolerance", evolve.tolerance)->capture_default_str();

    MapOptions map;
    auto *s_map = app.add_subcommand("map-params", "Ladder parameters to Hubbard parameters and back");
    s_map->add_option("--n", map.n, "Sites per chain (for the spectral offset)")->capture_default_str();
    s_map->add_option("--epsilon", map.epsilon)->capture_default_str();
    s_map->add_option("--gx", map.gx)->capture_default_str();
    s_map->add_option("--gz", map.gz)->capture_default_str();
    s_map->add_flag("--inverse", map.inverse, "Map (mu, U, t) back to (epsilon, gx, gz)");
    s_map->add_option("--mu", map.mu)->capture_default_str();
    s_map->add_option("--u", map.u)->capture_default_str();
    s_map->add_option("--t", map.t)->capture_default_str();

    CircuitOptions circuit;
    auto *s_cir = app.add_subcommand("circuit", "Circuit parameters to ladder and Hubbard parameters");
    s_cir->add_option("--n", circuit.n)->capture_default_str();
    s_cir->add_option("--e-c", circuit.e_c, "Charging energy: one value or 2n")->delimiter(',')->capture_default_str();
    s_cir->add_option("--e-j", circuit.e_j, "Josephson energy: one value or 2n")->delimiter(',')->capture_default_str();
    s_cir->add_option("--e-l", circuit.e_l, "Inductive energy: one value or 2n")->delimiter(',')->capture_default_str();
    s_cir->add_option("--phi-e", circuit.phi_e, "External phase in radians: one value or 2n")
        ->delimiter(',')
        ->capture_default_str();
    s_cir->add_option("--k-m", circuit.k_m, "M/L per rung: one value or n")->delimiter(',')->capture_default_str();
    s_cir->add_option("--cx", circuit.cx, "C^x/C per bond: one value or 2(n-1)")->delimiter(',')->capture_default_str();
    s_cir->add_option("--decoherence", circuit.decoherence, "Decoherence rate")->required();
    s_cir->add_option("--decoherence-unit", circuit.decoherence_unit, "Unit of the rate (GHz runs only)")
        ->check(CLI::IsMember({"same", "Hz", "kHz", "MHz", "GHz"}))
        ->capture_default_str();
    s_cir->add_option("--threshold", circuit.threshold, "Minimum |coupling| / rate")->capture_default_str();
    s_cir->add_flag("--numeric-gz", circuit.numeric_gz, "Also diagonalize the rung oscillator model");
    s_cir->add_option("--zz-model", circuit.zz_model)->check(CLI::IsMember({"pre", "full"}))->capture_default_str();
    s_cir->add_option("--truncation", circuit.truncation, "Oscillator levels per mode (0 = default)")
        ->capture_default_str();

    UtOptions ut;
    auto *s_ut = app.add_subcommand("ut-curve", "Universal |U/t| curve versus external phase");
    s_ut->add_option("--gamma", ut.gamma)->capture_default_str();
    s_ut->add_option("--points", ut.points, "Grid phi_i = pi i / points")->capture_default_str();
    s_ut->add_option("--max-phi", ut.max_phi, "Upper end of the accessible window");
    s_ut->add_option("--linewidth", ut.linewidth, "Qubit linewidth for the accessible window");
    s_ut->add_option("--min-gz-ratio", ut.min_gz_ratio, "Minimum |g^z| / linewidth")->capture_default_str();
    s_ut->add_option("--e-c", ut.e_c)->capture_default_str();
    s_ut->add_option("--e-j", ut.e_j)->capture_default_str();
    s_ut->add_option("--e-l", ut.e_l)->capture_default_str();
    s_ut->add_option("--k-m", ut.k_m)->capture_default_str();

    VerifyOptions verify;
    auto *s_ver = app.add_subcommand("verify", "Run the invariant suite and print a pass/fail table");
    add_ladder(s_ver, verify.ladder);
    s_ver->add_option("--t-final", verify.t_final)->capture_default_str();
    s_ver->add_option("--steps", verify.steps)->capture_default_str();
    s_ver->add_option("--random-triples", verify.random_triples)->capture_default_str();
    s_ver->add_option("--tol-spectrum", verify.tol_spectrum)->capture_default_str();
    s_ver->add_option("--tol-algebra", verify.tol_algebra)->capture_default_str();
    s_ver->add_option("--tol-symmetry", verify.tol_symmetry)->capture_default_str();
    s_ver->add_option("--tol-dynamics", verify.tol_dynamics)->capture_default_str();
    s_ver->add_option("--tol-leakage", verify.tol_leakage)->capture_default_str();

    DisorderOptions disorder;
    auto *s_dis = app.add_subcommand("disorder", "Seeded disorder sweep against the clean ladder");
    add_ladder(s_dis, disorder.ladder);
    s_dis->add_option("--eps-spread", disorder.eps_spread)->capture_default_str();
    s_dis->add_option("--gx-spread", disorder.gx_spread)->capture_default_str();
    s_dis->add_option("--gz-spread", disorder.gz_spread)->capture_default_str();
    s_dis->add_option("--distribution", disorder.distribution)
        ->check(CLI::IsMember({"gaussian", "uniform"}))
        ->capture_default_str();
    s_dis->add_option("--samples", disorder.samples)->capture_default_str();
    s_dis->add_option("--experiment", disorder.experiment)
        ->check(CLI::IsMember({"spectrum", "dynamics"}))
        ->capture_default_str();
    s_dis->add_option("--excite", disorder.excite, "Initial state and target sector, e.g. 1u,1d")->delimiter(',');
    s_dis->add_option("--levels", disorder.levels)->capture_default_str();
    s_dis->add_option("--t-final", disorder.t_final)->capture_default_str();
    s_dis->add_option("--steps", disorder.steps)->capture_default_str();
    s_dis->add_option("--threads", disorder.threads, "Worker threads (0 = all cores)")->capture_default_str();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion &e) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "qladder: " << e.what() << "\n";
        return kExitValidation;
    }

    CLI::App *sub = app.get_subcommands().front();
    const std::string mode = sub->get_name();
    Table table;
    int code = kExitOk;
    try {
        if (sub == s_spec) {
            code = run_spectrum(spectrum, ctx, table);
        } else if (sub == s_evo) {
            code = run_evolve(evolve, ctx, table);
        } else if (sub == s_map) {
            code = run_map_params(map, ctx, table);
        } else if (sub == s_cir) {
            code = run_circuit(circuit, ctx, table);
        } else if (sub == s_ut) {
            code = run_ut_curve(ut, ctx, table);
        } else if (sub == s_ver) {
            code = run_verify(verify, ctx, table);
        } else {
            code = run_disorder(disorder, ctx, table);
        }
    } catch (const NumericalError &e) {
        err << "qladder " << mode << ": numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument &e) {
        err << "qladder " << mode << ": invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::length_error &e) {
        err << "qladder " << mode << ": too large: " << e.what() << "\n";
        return kExitValidation;
    }

    const RunInfo info{mode, ctx.seed, fnv1a(canonical_config(sub, ctx))};
    const Format fmt = format == "json" ? Format::json : Format::csv;
    std::string path = output;
    if (path.empty()) {
        if (const char *dir = std::getenv("QLADDER_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = (std::filesystem::path(dir) / (mode + "." + format)).string();
        }
    }
    if (path.empty()) {
        write_table(out, table, info, fmt);
        return code;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "qladder " << mode << ": cannot write output file " << path << "\n";
        return kExitValidation;
    }
    write_table(file, table, info, fmt);
    file.close();
    if (!file) {
        err << "qladder " << mode << ": failed while writing " << path << "\n";
        return kExitValidation;
    }
    return code;
}

}  // namespace qladder::cli
