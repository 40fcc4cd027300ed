// Copyright 2026 The opdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "capi_handles.hpp"

namespace opdist_cli {

using nlohmann::json;

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json metadata(const RunConfig &cfg) {
    return {{"tool", "opdist"},
            {"version", opdist_version()},
            {"command", cfg.command},
            {"config", to_json(cfg)},
            {"rng", opdist_rng_algorithm()}};
}

std::string csv_preamble(const RunConfig &cfg) {
    std::ostringstream os;
    os << "# tool=opdist version=" << opdist_version() << "\n"
       << "# command=" << cfg.command << "\n"
       << "# config=" << to_json(cfg).dump() << "\n"
       << "# rng=" << opdist_rng_algorithm() << "\n";
    return os.str();
}

void emit(const RunConfig &cfg, const std::string &content) {
    if (cfg.out == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) {
            throw CommandError(kExitIo, "failed to write to stdout");
        }
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw CommandError(kExitIo, "cannot open output file '" + cfg.out + "'");
    }
    f << content;
    f.close();
    if (!f) {
        throw CommandError(kExitIo, "failed writing output file '" + cfg.out +
                                        "'");
    }
}

void emit_json(const RunConfig &cfg, const json &doc) {
    emit(cfg, doc.dump(2) + "\n");
}

State make_state(opdist_status (*make)(size_t, uint64_t, opdist_state **),
                 std::size_t dim, std::uint64_t seed, const char *what) {
    opdist_state *raw = nullptr;
    check(make(dim, seed, &raw), what);
    return State(raw);
}

State random_state(bool pure, std::size_t dim, std::uint64_t seed) {
    return pure ? make_state(opdist_state_random_pure, dim, seed, "random_pure")
                : make_state(opdist_state_random_mixed, dim, seed,
                             "random_mixed");
}

State qubit_state(double x, double y, double z) {
    const double v[3] = {x, y, z};
    opdist_state *raw = nullptr;
    check(opdist_state_from_bloch(2, v, 1e-9, &raw), "qubit state");
    return State(raw);
}

Mub standard(std::size_t dim) {
    opdist_mub *raw = nullptr;
    check(opdist_mub_standard(dim, &raw), "standard MUB set");
    return Mub(raw);
}

Mub rotated(const Mub &base, std::uint64_t seed) {
    opdist_mub *raw = nullptr;
    check(opdist_mub_rotate_haar(base.get(), seed, &raw), "rotate MUB set");
    return Mub(raw);
}

std::vector<double> projector(const Mub &m, std::size_t a, std::size_t i) {
    const std::size_t d = opdist_mub_dim(m.get());
    std::vector<double> buf(2 * d * d);
    check(opdist_mub_projector(m.get(), a, i, buf.data(), buf.size()),
          "read projector");
    return buf;
}

/// Negative control: the last basis is replaced by a copy of the first,
/// which breaks complementarity and completeness.
Mub corrupted(const Mub &good) {
    const std::size_t d = opdist_mub_dim(good.get());
    const std::size_t n = opdist_mub_num_bases(good.get());
    std::vector<double> all;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t src = a + 1 == n ? 0 : a;
        for (std::size_t i = 0; i < d; ++i) {
            const auto p = projector(good, src, i);
            all.insert(all.end(), p.begin(), p.end());
        }
        labels.emplace_back(opdist_mub_label(good.get(), src));
    }
    labels.back() += "-duplicate";
    std::vector<const char *> label_ptrs;
    for (const auto &l : labels) {
        label_ptrs.push_back(l.c_str());
    }
    opdist_mub *raw = nullptr;
    check(opdist_mub_from_projectors(d, n, all.data(), label_ptrs.data(), &raw),
          "corrupted MUB set");
    return Mub(raw);
}

Mub maybe_corrupt(const RunConfig &cfg, Mub m) {
    return cfg.self_test == "corrupt-mub" ? corrupted(m) : std::move(m);
}

std::vector<double> bloch_of(const State &s) {
    const std::size_t d = opdist_state_dim(s.get());
    std::vector<double> v(d * d - 1);
    check(opdist_state_bloch(s.get(), v.data(), v.size()), "Bloch vector");
    return v;
}

json matrix_json(const std::vector<double> &re_im, std::size_t d) {
    json rows = json::array();
    for (std::size_t r = 0; r < d; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d; ++c) {
            const std::size_t k = 2 * (r * d + c);
            row.push_back({re_im[k], re_im[k + 1]});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json report_json(const opdist_mub_report &r) {
    return {{"dim", r.dim},
            {"num_bases", r.num_bases},
            {"tol", r.tol},
            {"intra_basis", r.intra_basis},
            {"overlap", r.overlap},
            {"bloch_orthogonality", r.bloch_orthogonality},
            {"subspace_projector", r.subspace_projector},
            {"subspace_orthogonality", r.subspace_orthogonality},
            {"identity_resolution", r.identity_resolution},
            {"pass", r.pass != 0}};
}

void require_format(const RunConfig &cfg,
                    std::initializer_list<const char *> allowed) {
    for (const char *f : allowed) {
        if (cfg.format == f) {
            return;
        }
    }
    throw CommandError(kExitBadConfig, "format '" + cfg.format +
                                           "' is not supported by command '" +
                                           cfg.command + "'");
}

} // namespace

json to_json(const RunConfig &cfg) {
    return {{"command", cfg.command},
            {"dim", cfg.dim},
            {"seeds", cfg.seeds},
            {"trials", cfg.trials},
            {"shots", cfg.shots},
            {"tol", cfg.tol},
            {"format", cfg.format},
            {"self_test", cfg.self_test},
            {"mode", cfg.mode},
            {"pair", cfg.pair},
            {"pair_seed", cfg.pair_seed},
            {"kind", cfg.kind},
            {"bias_corrected", cfg.bias_corrected},
            {"identical", cfg.identical}};
}

void finalize(RunConfig &cfg) {
    auto bad = [](const std::string &msg) {
        throw CommandError(kExitBadConfig, msg);
    };
    if (cfg.seeds.empty()) {
        cfg.seeds.push_back(1);
    }
    if (cfg.num_seeds > 0) {
        // --num-seeds K expands the first seed s into s, s+1, ..., s+K-1.
        const std::uint64_t first = cfg.seeds.front();
        cfg.seeds.clear();
        for (std::size_t k = 0; k < cfg.num_seeds; ++k) {
            cfg.seeds.push_back(first + k);
        }
        cfg.num_seeds = 0;
    }
    if (cfg.format.empty()) {
        cfg.format = (cfg.command == "equivalence" || cfg.command == "shots")
                         ? "csv"
                         : "json";
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        bad("format must be json or csv");
    }
    if (!(cfg.tol > 0.0)) {
        bad("tolerance must be positive");
    }
    if (cfg.trials < 1) {
        bad("trials must be at least 1");
    }
    if (cfg.dim < 2) {
        bad("dimension must be at least 2");
    }
    if (cfg.shots.empty()) {
        if (cfg.command == "shots" || cfg.command == "tomography") {
            cfg.shots = {1000, 10000, 100000, 1000000};
        } else {
            cfg.shots = {10000};
        }
    }
    for (auto n : cfg.shots) {
        if (n < 1) {
            bad("every shot count must be at least 1");
        }
    }
    if (!cfg.self_test.empty() && cfg.self_test != "corrupt-mub") {
        bad("unknown self-test '" + cfg.self_test + "'");
    }
    if (cfg.mode != "both" && cfg.mode != "mixed" && cfg.mode != "pure") {
        bad("mode must be mixed, pure or both");
    }
    if (cfg.kind != "mixed" && cfg.kind != "pure") {
        bad("kind must be mixed or pure");
    }
    if (cfg.pair.empty()) {
        cfg.pair = cfg.command == "tomography" ? "h-vs-45" : "random";
    }
    if (cfg.pair != "random" && cfg.pair != "orthogonal" &&
        cfg.pair != "h-vs-45") {
        bad("pair must be random, orthogonal or h-vs-45");
    }
    if (cfg.command == "tomography" && cfg.dim != 2) {
        bad("tomography simulates polarization qubits; --dim must be 2");
    }
}

int run(RunConfig cfg) {
    try {
        finalize(cfg);
        if (cfg.command == "mub") {
            return cmd_mub(cfg);
        }
        if (cfg.command == "distance") {
            return cmd_distance(cfg);
        }
        if (cfg.command == "equivalence") {
            return cmd_equivalence(cfg);
        }
        if (cfg.command == "ordering") {
            return cmd_ordering(cfg);
        }
        if (cfg.command == "shots" || cfg.command == "tomography") {
            return cmd_shots(cfg);
        }
        throw CommandError(kExitBadConfig, "unknown command '" + cfg.command +
                                               "'");
    } catch (const CommandError &e) {
        std::cerr << "opdist " << cfg.command << ": " << e.what() << "\n";
        return e.exit_code();
    }
}

int cmd_mub(const RunConfig &cfg) {
    require_format(cfg, {"json"});
    const Mub m = maybe_corrupt(cfg, standard(cfg.dim));
    opdist_mub_report report{};
    check(opdist_mub_verify(m.get(), cfg.tol, &report), "verify MUB set");

    json bases = json::array();
    for (std::size_t a = 0; a < opdist_mub_num_bases(m.get()); ++a) {
        json projectors = json::array();
        for (std::size_t i = 0; i < cfg.dim; ++i) {
            projectors.push_back(matrix_json(projector(m, a, i), cfg.dim));
        }
        bases.push_back({{"label", opdist_mub_label(m.get(), a)},
                         {"projectors", std::move(projectors)}});
    }
    emit_json(cfg, {{"metadata", metadata(cfg)},
                    {"dim", cfg.dim},
                    {"bases", std::move(bases)},
                    {"verification", report_json(report)}});
    return report.pass ? kExitOk : kExitCheckFailed;
}

int cmd_distance(const RunConfig &cfg) {
    require_format(cfg, {"json"});
    const bool pure = cfg.kind == "pure";
    const std::uint64_t seed = cfg.seeds.front();
    const State rho1 = random_state(pure, cfg.dim, opdist_split_seed(seed, 0));
    const State rho2 =
        cfg.identical
            ? random_state(pure, cfg.dim, opdist_split_seed(seed, 0))
            : random_state(pure, cfg.dim, opdist_split_seed(seed, 1));
    const Mub m = maybe_corrupt(cfg, standard(cfg.dim));

    std::vector<double> per_basis(opdist_mub_num_bases(m.get()));
    opdist_distance_summary s{};
    check(opdist_total_distance(rho1.get(), rho2.get(), m.get(),
                                per_basis.data(), per_basis.size(), &s),
          "total distance");
    double fid = 0.0;
    double info1 = 0.0;
    double info2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    check(opdist_fidelity(rho1.get(), rho2.get(), &fid), "fidelity");
    check(opdist_information_content(rho1.get(), 1.0, &info1), "information");
    check(opdist_information_content(rho2.get(), 1.0, &info2), "information");
    check(opdist_state_purity(rho1.get(), &p1), "purity");
    check(opdist_state_purity(rho2.get(), &p2), "purity");

    json bases = json::array();
    for (std::size_t a = 0; a < per_basis.size(); ++a) {
        bases.push_back({{"label", opdist_mub_label(m.get(), a)},
                         {"distance", per_basis[a]}});
    }
    emit_json(cfg, {{"metadata", metadata(cfg)},
                    {"states",
                     {{{"bloch", bloch_of(rho1)}, {"purity", p1},
                       {"information_content", info1}},
                      {{"bloch", bloch_of(rho2)}, {"purity", p2},
                       {"information_content", info2}}}},
                    {"per_basis", std::move(bases)},
                    {"total", s.total},
                    {"hs_distance_sq", s.hs_distance_sq},
                    {"deviation", s.deviation},
                    {"fidelity", fid},
                    {"pass", s.deviation <= cfg.tol}});
    return s.deviation <= cfg.tol ? kExitOk : kExitCheckFailed;
}

int cmd_equivalence(const RunConfig &cfg) {
    const Mub base = standard(cfg.dim);
    struct Row {
        std::uint64_t seed;
        std::size_t trial;
        std::string kind;
        opdist_distance_summary s;
    };
    std::vector<Row> rows;
    double max_dev = 0.0;
    for (const std::uint64_t seed : cfg.seeds) {
        const Mub m = maybe_corrupt(cfg, rotated(base, opdist_split_seed(seed, 0)));
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            // Alternate Ginibre-mixed and Haar-pure pairs.
            const bool pure = t % 2 == 1;
            const State r1 =
                random_state(pure, cfg.dim, opdist_split_seed(seed, 2 * t + 1));
            const State r2 =
                random_state(pure, cfg.dim,
                             opdist_split_seed(seed, cfg.identical ? 2 * t + 1
                                                                   : 2 * t + 2));
            opdist_distance_summary s{};
            check(opdist_total_distance(r1.get(), r2.get(), m.get(), nullptr, 0,
                                        &s),
                  "total distance");
            max_dev = std::max(max_dev, s.deviation);
            rows.push_back({seed, t, pure ? "pure" : "mixed", s});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
        return std::tie(a.seed, a.trial) < std::tie(b.seed, b.trial);
    });
    const bool pass = max_dev <= cfg.tol;

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << csv_preamble(cfg);
        os << "seed,trial,kind,d_total,hs_distance_sq,deviation\n";
        for (const auto &r : rows) {
            os << r.seed << "," << r.trial << "," << r.kind << ","
               << fmt(r.s.total) << "," << fmt(r.s.hs_distance_sq) << ","
               << fmt(r.s.deviation) << "\n";
        }
        os << "# summary max_deviation=" << fmt(max_dev)
           << " pass=" << (pass ? "true" : "false") << "\n";
        emit(cfg, os.str());
    } else {
        json out = json::array();
        for (const auto &r : rows) {
            out.push_back({{"seed", r.seed},
                           {"trial", r.trial},
                           {"kind", r.kind},
                           {"d_total", r.s.total},
                           {"hs_distance_sq", r.s.hs_distance_sq},
                           {"deviation", r.s.deviation}});
        }
        emit_json(cfg, {{"metadata", metadata(cfg)},
                        {"rows", std::move(out)},
                        {"max_deviation", max_dev},
                        {"pass", pass}});
    }
    if (!pass) {
        std::cerr << "opdist equivalence: max deviation " << fmt(max_dev)
                  << " exceeds tolerance " << fmt(cfg.tol) << "\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_ordering(const RunConfig &cfg) {
    const Mub m = standard(cfg.dim);
    struct Found {
        std::string mode;
        std::string source;
        std::uint64_t seed;
        std::size_t trial;
        std::vector<double> sigma, rho_i, rho_j;
        opdist_ordering_violation v;
    };
    std::vector<Found> found;
    std::size_t pairs_mixed = 0;
    std::size_t pairs_pure = 0;

    auto examine = [&](const std::string &mode, const std::string &source,
                       std::uint64_t seed, std::size_t trial,
                       const State &sigma, const State &a, const State &b) {
        const opdist_state *tests[2] = {a.get(), b.get()};
        opdist_ordering *raw = nullptr;
        check(opdist_ordering_check(sigma.get(), tests, 2, m.get(), &raw),
              "ordering check");
        const Ordering report(raw);
        (mode == "mixed" ? pairs_mixed : pairs_pure) += 1;
        for (std::size_t k = 0; k < opdist_ordering_num_violations(report.get());
             ++k) {
            Found f{mode, source, seed, trial, bloch_of(sigma), bloch_of(a),
                    bloch_of(b), {}};
            check(opdist_ordering_violation_at(report.get(), k, &f.v),
                  "ordering violation");
            found.push_back(std::move(f));
        }
    };

    std::vector<std::string> modes;
    if (cfg.mode == "both" || cfg.mode == "pure") {
        modes.emplace_back("pure");
    }
    if (cfg.mode == "both" || cfg.mode == "mixed") {
        modes.emplace_back("mixed");
    }
    for (const auto &mode : modes) {
        const bool pure_tests = mode == "pure";
        if (!pure_tests && cfg.dim == 2) {
            // |0><0| against diag(0.7, 0.3) and (1 + 0.8 sx + 0.5 sz)/2.
            examine(mode, "fixed", 0, 0, qubit_state(0, 0, 1),
                    qubit_state(0, 0, 0.4), qubit_state(0.8, 0, 0.5));
        }
        for (const std::uint64_t seed : cfg.seeds) {
            // Separate streams for the two modes.
            const std::uint64_t base =
                opdist_split_seed(seed, pure_tests ? 1 : 2);
            for (std::size_t t = 0; t < cfg.trials; ++t) {
                const State sigma = random_state(
                    true, cfg.dim, opdist_split_seed(base, 3 * t));
                const State a = random_state(pure_tests, cfg.dim,
                                             opdist_split_seed(base, 3 * t + 1));
                const State b = random_state(pure_tests, cfg.dim,
                                             opdist_split_seed(base, 3 * t + 2));
                examine(mode, "random", seed, t, sigma, a, b);
            }
        }
    }

    std::size_t violations_mixed = 0;
    std::size_t violations_pure = 0;
    for (const auto &f : found) {
        (f.mode == "mixed" ? violations_mixed : violations_pure) += 1;
    }
    bool pass = true;
    if (cfg.mode != "mixed") {
        pass = pass && violations_pure == 0;
    }
    if (cfg.mode != "pure") {
        pass = pass && violations_mixed >= 1;
    }

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << csv_preamble(cfg);
        os << "mode,source,seed,trial,fidelity_i,fidelity_j,distance_i,"
              "distance_j\n";
        for (const auto &f : found) {
            os << f.mode << "," << f.source << "," << f.seed << "," << f.trial
               << "," << fmt(f.v.fidelity_i) << "," << fmt(f.v.fidelity_j)
               << "," << fmt(f.v.distance_i) << "," << fmt(f.v.distance_j)
               << "\n";
        }
        os << "# summary pairs_pure=" << pairs_pure
           << " violations_pure=" << violations_pure
           << " pairs_mixed=" << pairs_mixed
           << " violations_mixed=" << violations_mixed
           << " pass=" << (pass ? "true" : "false") << "\n";
        emit(cfg, os.str());
    } else {
        json out = json::array();
        for (const auto &f : found) {
            out.push_back({{"mode", f.mode},
                           {"source", f.source},
                           {"seed", f.seed},
                           {"trial", f.trial},
                           {"sigma_bloch", f.sigma},
                           {"rho_i_bloch", f.rho_i},
                           {"rho_j_bloch", f.rho_j},
                           {"fidelity_i", f.v.fidelity_i},
                           {"fidelity_j", f.v.fidelity_j},
                           {"distance_i", f.v.distance_i},
                           {"distance_j", f.v.distance_j}});
        }
        emit_json(cfg, {{"metadata", metadata(cfg)},
                        {"violations", std::move(out)},
                        {"summary",
                         {{"pairs_pure", pairs_pure},
                          {"violations_pure", violations_pure},
                          {"pairs_mixed", pairs_mixed},
                          {"violations_mixed", violations_mixed},
                          {"pass", pass}}}});
    }
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_shots(const RunConfig &cfg) {
    const bool tomography = cfg.command == "tomography";
    State rho1;
    State rho2;
    if (cfg.pair == "h-vs-45") {
        if (cfg.dim != 2) {
            throw CommandError(kExitBadConfig,
                               "pair h-vs-45 is only defined for qubits");
        }
        rho1 = qubit_state(0, 0, 1);
        rho2 = qubit_state(1, 0, 0);
    } else if (cfg.pair == "orthogonal") {
        const Mub m = standard(cfg.dim);
        const auto p0 = projector(m, 0, 0);
        const auto p1 = projector(m, 0, 1);
        opdist_state *raw = nullptr;
        check(opdist_state_from_matrix(cfg.dim, p0.data(), 1e-9, &raw), "state");
        rho1.reset(raw);
        check(opdist_state_from_matrix(cfg.dim, p1.data(), 1e-9, &raw), "state");
        rho2.reset(raw);
    } else {
        rho1 = random_state(false, cfg.dim, cfg.pair_seed);
        rho2 = random_state(false, cfg.dim, opdist_split_seed(cfg.pair_seed, 1));
    }
    const Mub m = standard(cfg.dim);
    const opdist_estimator estimator = cfg.bias_corrected
                                           ? OPDIST_ESTIMATOR_BIAS_CORRECTED
                                           : OPDIST_ESTIMATOR_PLUG_IN;

    struct Row {
        std::uint64_t n;
        std::uint64_t seed;
        double estimate;
        double exact;
        json detail;
    };
    std::vector<Row> rows;
    for (const std::uint64_t n : cfg.shots) {
        for (const std::uint64_t seed : cfg.seeds) {
            Row r{n, seed, 0.0, 0.0, nullptr};
            if (tomography) {
                opdist_tomography_report t{};
                check(opdist_tomography(rho1.get(), rho2.get(), n, seed, &t),
                      "tomography");
                r.estimate = t.estimated_distance;
                r.exact = t.exact_distance;
                json settings = json::array();
                for (std::size_t s = 0; s < 3; ++s) {
                    settings.push_back(
                        {{"polarizer", opdist_tomography_setting_name(s)},
                         {"frequencies",
                          {{t.frequencies[s][0][0], t.frequencies[s][0][1]},
                           {t.frequencies[s][1][0], t.frequencies[s][1][1]}}}});
                }
                json systems = json::array();
                for (std::size_t k = 0; k < 2; ++k) {
                    systems.push_back(
                        {{"stokes",
                          {t.stokes[k][0], t.stokes[k][1], t.stokes[k][2]}},
                         {"projected", t.projected[k] != 0},
                         {"reconstructed",
                          matrix_json(std::vector<double>(
                                          t.reconstructed[k],
                                          t.reconstructed[k] + 8),
                                      2)}});
                }
                r.detail = {{"filter_total_shots_per_system",
                             t.total_shots_per_system},
                            {"settings", std::move(settings)},
                            {"systems", std::move(systems)},
                            {"reconstructed_distance", t.reconstructed_distance}};
            } else {
                check(opdist_estimate_total_distance(rho1.get(), rho2.get(),
                                                     m.get(), n, seed, estimator,
                                                     &r.estimate, &r.exact),
                      "estimate total distance");
            }
            rows.push_back(std::move(r));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row &a, const Row &b) {
        return std::tie(a.seed, a.n) < std::tie(b.seed, b.n);
    });

    // RMS error per shot count, then the log-log slope across shot counts.
    std::vector<double> ns;
    std::vector<double> rms;
    for (const std::uint64_t n : cfg.shots) {
        if (std::find(ns.begin(), ns.end(), static_cast<double>(n)) != ns.end()) {
            continue;
        }
        double acc = 0.0;
        std::size_t count = 0;
        for (const auto &r : rows) {
            if (r.n == n) {
                acc += (r.estimate - r.exact) * (r.estimate - r.exact);
                ++count;
            }
        }
        ns.push_back(static_cast<double>(n));
        rms.push_back(std::sqrt(acc / static_cast<double>(count)));
    }
    {
        std::vector<std::size_t> order(ns.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            order[k] = k;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return ns[a] < ns[b]; });
        std::vector<double> ns2;
        std::vector<double> rms2;
        for (auto k : order) {
            ns2.push_back(ns[k]);
            rms2.push_back(rms[k]);
        }
        ns.swap(ns2);
        rms.swap(rms2);
    }
    json slope = nullptr;
    if (ns.size() >= 2 &&
        std::all_of(rms.begin(), rms.end(), [](double x) { return x > 0.0; })) {
        double s = 0.0;
        check(opdist_log_log_slope(ns.data(), rms.data(), ns.size(), &s),
              "log-log slope");
        slope = s;
    }

    const char *estimator_name =
        tomography ? "plug-in"
                   : (cfg.bias_corrected ? "bias-corrected" : "plug-in");
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << csv_preamble(cfg);
        os << "# estimator=" << estimator_name << "\n";
        os << "kind,n,seed,estimate,exact,abs_error\n";
        for (const auto &r : rows) {
            os << "sample," << r.n << "," << r.seed << "," << fmt(r.estimate)
               << "," << fmt(r.exact) << ","
               << fmt(std::abs(r.estimate - r.exact)) << "\n";
        }
        for (std::size_t k = 0; k < ns.size(); ++k) {
            os << "rms," << static_cast<std::uint64_t>(ns[k]) << ",,,,"
               << fmt(rms[k]) << "\n";
        }
        os << "slope,,,,," << (slope.is_null() ? std::string("nan")
                                                : fmt(slope.get<double>()))
           << "\n";
        emit(cfg, os.str());
    } else {
        json out = json::array();
        for (auto &r : rows) {
            json row = {{"n", r.n},
                        {"seed", r.seed},
                        {"estimate", r.estimate},
                        {"exact", r.exact},
                        {"abs_error", std::abs(r.estimate - r.exact)}};
            if (!r.detail.is_null()) {
                row["tomography"] = std::move(r.detail);
            }
            out.push_back(std::move(row));
        }
        json rms_rows = json::array();
        for (std::size_t k = 0; k < ns.size(); ++k) {
            rms_rows.push_back({{"n", static_cast<std::uint64_t>(ns[k])},
                                {"rms_error", rms[k]}});
        }
        emit_json(cfg, {{"metadata", metadata(cfg)},
                        {"estimator", estimator_name},
                        {"states",
                         {{{"bloch", bloch_of(rho1)}}, {{"bloch", bloch_of(rho2)}}}},
                        {"rows", std::move(out)},
                        {"rms", std::move(rms_rows)},
                        {"log_log_slope", slope}});
    }
    return kExitOk;
}

} // namespace opdist_cli
