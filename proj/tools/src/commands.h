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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qladder/hamiltonians.h"
#include "table.h"

namespace qladder::cli {

struct LadderOptions {
    int n = 2;
    std::vector<double> epsilon{1.0};
    std::vector<double> gx{0.0};
    std::vector<double> gz{0.0};

    LadderParams params() const;
};

struct SpectrumOptions {
    LadderOptions ladder;
    std::string model = "hqs";
    std::optional<double> mu;
    std::optional<double> u;
    std::optional<double> t;
    std::optional<int> n_up;
    std::optional<int> n_down;
    int levels = 0;
};

struct EvolveOptions {
    LadderOptions ladder;
    std::vector<std::string> excite;
    double t_final = 10.0;
    int steps = 100;
    std::vector<double> times;
    std::vector<std::string> observables;
    int krylov_dim = 30;
    double tolerance = 1e-9;
};

struct MapOptions {
    int n = 1;
    double epsilon = 0.0;
    double gx = 0.0;
    double gz = 0.0;
    bool inverse = false;
    double mu = 0.0;
    double u = 0.0;
    double t = 0.0;
};

struct CircuitOptions {
    int n = 1;
    std::vector<double> e_c{0.25};
    std::vector<double> e_j{12.5};
    std::vector<double> e_l{1250.0};
    std::vector<double> phi_e{1.5707963267948966};
    std::vector<double> k_m{0.5};
    std::vector<double> cx{0.04};
    double decoherence = 0.0;
    std::string decoherence_unit = "same";
    double threshold = 1.0;
    bool numeric_gz = false;
    std::string zz_model = "pre";
    int truncation = 0;
};

struct UtOptions {
    double gamma = 1.0;
    int points = 200;
    std::optional<double> max_phi;
    std::optional<double> linewidth;
    double min_gz_ratio = 1.0;
    double e_c = 0.25;
    double e_j = 12.5;
    double e_l = 1250.0;
    double k_m = 0.5;
};

struct VerifyOptions {
    LadderOptions ladder;
    double t_final = 10.0;
    int steps = 20;
    int random_triples = 5;
    double tol_spectrum = 1e-10;
    double tol_algebra = 1e-12;
    double tol_symmetry = 1e-12;
    double tol_dynamics = 1e-7;
    double tol_leakage = 1e-9;
};

struct DisorderOptions {
    LadderOptions ladder;
    double eps_spread = 0.0;
    double gx_spread = 0.0;
    double gz_spread = 0.0;
    std::string distribution = "gaussian";
    int samples = 10;
    std::string experiment = "spectrum";
    std::vector<std::string> excite;
    int levels = 4;
    double t_final = 10.0;
    int steps = 20;
    int threads = 0;
};

struct Context {
    std::uint64_t seed = 1;
    std::string unit = "dimensionless";
    std::ostream *err = nullptr;
};

/// Each command fills `table`; the return value is the exit code.
int run_spectrum(const SpectrumOptions &o, const Context &ctx, Table &table);
int run_evolve(const EvolveOptions &o, const Context &ctx, Table &table);
int run_map_params(const MapOptions &o, const Context &ctx, Table &table);
int run_circuit(const CircuitOptions &o, const Context &ctx, Table &table);
int run_ut_curve(const UtOptions &o, const Context &ctx, Table &table);
int run_verify(const VerifyOptions &o, const Context &ctx, Table &table);
int run_disorder(const DisorderOptions &o, const Context &ctx, Table &table);

}  // namespace qladder::cli
