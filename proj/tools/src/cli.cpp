// Copyright 2026 The cqa Authors
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

#include "cqa_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cqa/anneal.hpp"
#include "cqa/constraints.hpp"
#include "cqa/drivers.hpp"
#include "cqa/encodings.hpp"
#include "cqa/json_io.hpp"
#include "cqa/spectral.hpp"
#include "cqa/statespace.hpp"

namespace cqa::cli {

namespace {

using io::Json;

constexpr double kCommutationTolerance = 1e-12;

enum class Format { json, csv };

struct Options {
    std::string out;
    std::string format;

    // driver
    std::string family;
    std::string params;
    // verify
    std::string driver;
    std::string constraints;
    std::size_t max_witnesses = 16;
    // sector
    std::optional<int> n;
    // spectrum / anneal
    std::string hp;
    std::string hd;
    int grid = 101;
    int levels = 4;
    std::string sector;
    double T = 0.0;
    bool restrict_to_sector = false;
    int checkpoints = 64;
    double drift_tolerance = 1e-3;
    std::optional<double> aux_field;
    // magcurve
    double bmax = 3.0;
    int points = 61;
    double J = 1.0;
    bool full_space = false;
    // resources
    std::string encoding;
    // gf2
    std::string parities;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument:
            return kUsage;
        case ErrorCode::parse:
            return kParse;
        case ErrorCode::dimension_limit:
            return kDimensionLimit;
        case ErrorCode::infeasible:
            return kInfeasible;
        case ErrorCode::closure_violation:
            return kClosureViolation;
        case ErrorCode::degenerate:
            return kDegenerate;
        case ErrorCode::wrong_sector:
            return kWrongSector;
    }
    return kInternal;
}

int report_error(std::ostream &err, const std::string &code, const std::string &message, int status) {
    Json j = {{"format_version", io::kFormatVersion}, {"error", {{"code", code}, {"message", message}}}};
    err << j.dump() << "\n";
    return status;
}

Format resolve_format(const Options &o, Format fallback) {
    if (o.format.empty()) {
        if (o.out.size() >= 4 && o.out.compare(o.out.size() - 4, 4, ".csv") == 0) {
            return Format::csv;
        }
        return fallback;
    }
    return o.format == "csv" ? Format::csv : Format::json;
}

void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.out.empty()) {
        out << text;
    } else {
        io::write_text_file(o.out, text);
    }
}

void emit_json(const Options &o, std::ostream &out, const Json &j) {
    emit(o, out, j.dump(2) + "\n");
}

io::ConstraintSet load_constraints(const std::string &path) {
    return io::constraint_set_from_json(io::read_json_file(path));
}

Hamiltonian load_hamiltonian(const std::string &path) {
    return io::hamiltonian_from_json(io::read_json_file(path));
}

int cmd_driver(const Options &o, std::ostream &out) {
    DriverFamily family = driver_family_from_string(o.family);
    Hamiltonian h = io::build_driver(family, io::read_json_file(o.params));
    Json j = io::to_json(h);
    j["family"] = to_string(family);
    emit_json(o, out, j);
    return kOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
    Hamiltonian driver = load_hamiltonian(o.driver);
    io::ConstraintSet cs = load_constraints(o.constraints);
    require(cs.n_sites == driver.n_sites(), "driver and constraints have different numbers of sites");
    VerifyReport report = verify_driver(driver, cs.constraints, o.max_witnesses);
    Json norms = Json::array();
    bool commuting = true;
    for (const auto &c : cs.constraints) {
        double norm = commutator_norm(driver, constraint_as_hamiltonian(c));
        commuting = commuting && norm < kCommutationTolerance;
        norms.push_back(norm);
    }
    Json j = io::to_json(report);
    j["commutator_norms"] = norms;
    j["commutation"] = commuting ? "pass" : "fail";
    emit_json(o, out, j);
    return report.pass() && commuting ? kOk : kVerificationFailed;
}

int cmd_sector(const Options &o, std::ostream &out) {
    io::ConstraintSet cs = load_constraints(o.constraints);
    if (o.n) {
        require(*o.n == cs.n_sites, "--n disagrees with the constraint file");
    }
    SectorBasis sector = sector_basis(cs.constraints, cs.n_sites);
    require(sector.feasible(), "constraints admit no state", ErrorCode::infeasible);
    emit_json(o, out, io::to_json(sector));
    return kOk;
}

std::optional<SectorBasis> load_sector(const std::string &path, int n_sites, std::vector<Constraint> *keep = nullptr) {
    if (path.empty()) {
        return std::nullopt;
    }
    io::ConstraintSet cs = load_constraints(path);
    require(cs.n_sites == n_sites, "sector constraints have a different number of sites");
    SectorBasis sector = sector_basis(cs.constraints, cs.n_sites);
    require(sector.feasible(), "constraints admit no state", ErrorCode::infeasible);
    if (keep) {
        *keep = cs.constraints;
    }
    return sector;
}

int cmd_spectrum(const Options &o, std::ostream &out) {
    Hamiltonian hp = load_hamiltonian(o.hp);
    Hamiltonian hd = load_hamiltonian(o.hd);
    require(hp.n_sites() == hd.n_sites(), "H_p and H_d have different numbers of sites");
    require(o.grid >= 2, "--grid needs at least 2 points");
    auto grid = linspace(0.0, 1.0, o.grid);
    auto sector = load_sector(o.sector, hp.n_sites());
    SpectrumSweep sweep = sector ? spectrum_sweep(hp, hd, grid, *sector, o.levels) : spectrum_sweep(hp, hd, grid, o.levels);
    if (resolve_format(o, Format::json) == Format::csv) {
        emit(o, out, io::to_csv(sweep));
    } else {
        emit_json(o, out, io::to_json(sweep));
    }
    return kOk;
}

int cmd_magcurve(const Options &o, std::ostream &out) {
    require(o.n.has_value(), "--n is required");
    require(o.points >= 1, "--points must be positive");
    require(o.bmax >= 0.0, "--bmax must be non-negative");
    auto grid = linspace(0.0, o.bmax, o.points);
    MagnetizationCurve curve =
        o.full_space ? magnetization_curve_full_space(*o.n, grid, o.J) : magnetization_curve(*o.n, grid, o.J);
    if (resolve_format(o, Format::csv) == Format::csv) {
        emit(o, out, io::to_csv(curve));
    } else {
        emit_json(o, out,
                  {{"format_version", io::kFormatVersion},
                   {"n", curve.n},
                   {"b_over_j", curve.b_over_j},
                   {"mz", curve.mz},
                   {"e0_per_jn", curve.e0_density}});
    }
    return kOk;
}

int cmd_anneal(const Options &o, std::ostream &out) {
    Hamiltonian hp = load_hamiltonian(o.hp);
    Hamiltonian hd = load_hamiltonian(o.hd);
    require(hp.n_sites() == hd.n_sites(), "H_p and H_d have different numbers of sites");
    std::vector<Constraint> cs;
    auto sector = load_sector(o.sector, hp.n_sites(), &cs);
    require(!o.restrict_to_sector || sector, "--restrict needs --sector");
    require(!o.aux_field || sector, "--aux-field needs --sector");
    Schedule sched;
    sched.total_time = o.T;
    sched.checkpoints = o.checkpoints;
    sched.drift_tolerance = o.drift_tolerance;
    AnnealResult result;
    if (o.restrict_to_sector) {
        require(!o.aux_field, "--aux-field prepares a full-space state; drop --restrict");
        SectorGround g = sector_ground(hd, *sector);
        require(g.multiplicity == 1, "sector ground state of H_d is degenerate", ErrorCode::degenerate);
        result = evolve_in_sector(hp, hd, project(*sector, prepare_initial(hd, SectorGroundMode{*sector})), sched,
                                  *sector);
    } else {
        PrepareMode mode = GlobalGround{};
        if (o.aux_field) {
            mode = AuxAssisted{cs, std::vector<double>(cs.size(), *o.aux_field)};
        } else if (sector) {
            mode = SectorGroundMode{*sector};
        }
        result = evolve(hp, hd, prepare_initial(hd, mode), sched, sector ? &*sector : nullptr);
    }
    if (resolve_format(o, Format::json) == Format::csv) {
        emit(o, out, io::to_csv(result));
    } else {
        emit_json(o, out, io::to_json(result));
    }
    return kOk;
}

int cmd_resources(const Options &o, std::ostream &out) {
    require(o.n.has_value(), "--n is required");
    Encoding e = encoding_from_string(o.encoding);
    Json j = io::to_json(resource_counts(e, *o.n));
    j["encoding"] = to_string(e);
    j["n"] = *o.n;
    emit_json(o, out, j);
    return kOk;
}

int cmd_gf2(const Options &o, std::ostream &out) {
    io::ConstraintSet cs = load_constraints(o.parities);
    emit_json(o, out, io::to_json(gf2_solve(cs.constraints)));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Constraint-commuting driver toolkit"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options &, std::ostream &)> action;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--out", o.out, "Write the artifact to this file instead of stdout");
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };

    auto *driver = app.add_subcommand("driver", "Build a driver Hamiltonian");
    driver->add_option("--family", o.family, "Driver family")->required();
    driver->add_option("--params", o.params, "Parameter JSON file")->required()->check(CLI::ExistingFile);
    add_common(driver);
    driver->callback([&] { action = cmd_driver; });

    auto *verify = app.add_subcommand("verify", "Check closure, connectivity and commutation");
    verify->add_option("--driver", o.driver, "Driver Hamiltonian JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--constraints", o.constraints, "Constraint set JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--max-witnesses", o.max_witnesses, "Witnesses listed per report");
    add_common(verify);
    verify->callback([&] { action = cmd_verify; });

    auto *sector = app.add_subcommand("sector", "Enumerate the states satisfying a constraint set");
    sector->add_option("--constraints", o.constraints, "Constraint set JSON")->required()->check(CLI::ExistingFile);
    sector->add_option("--n", o.n, "Number of sites (must match the file)");
    add_common(sector);
    sector->callback([&] { action = cmd_sector; });

    auto *spectrum = app.add_subcommand("spectrum", "Low-lying spectrum of s H_p + (1 - s) H_d");
    spectrum->add_option("--hp", o.hp, "Problem Hamiltonian JSON")->required()->check(CLI::ExistingFile);
    spectrum->add_option("--hd", o.hd, "Driver Hamiltonian JSON")->required()->check(CLI::ExistingFile);
    spectrum->add_option("--grid", o.grid, "Number of evenly spaced s values in [0, 1]")->required();
    spectrum->add_option("--sector", o.sector, "Restrict to the sector of this constraint set")
        ->check(CLI::ExistingFile);
    spectrum->add_option("--levels", o.levels, "Eigenvalues kept per grid point");
    add_common(spectrum);
    add_format(spectrum);
    spectrum->callback([&] { action = cmd_spectrum; });

    auto *magcurve = app.add_subcommand("magcurve", "Ground-state magnetization of the XY ring in a field");
    magcurve->add_option("--n", o.n, "Ring length")->required();
    magcurve->add_option("--bmax", o.bmax, "Largest B/J");
    magcurve->add_option("--points", o.points, "Grid points from 0 to bmax");
    magcurve->add_option("--J", o.J, "Exchange coupling");
    magcurve->add_flag("--full-space", o.full_space, "Diagonalize in the full space instead of per sector");
    add_common(magcurve);
    add_format(magcurve);
    magcurve->callback([&] { action = cmd_magcurve; });

    auto *anneal = app.add_subcommand("anneal", "Evolve under H(s) = s H_p + (1 - s) H_d");
    anneal->add_option("--hp", o.hp, "Problem Hamiltonian JSON")->required()->check(CLI::ExistingFile);
    anneal->add_option("--hd", o.hd, "Driver Hamiltonian JSON")->required()->check(CLI::ExistingFile);
    anneal->add_option("--T", o.T, "Total anneal time")->required();
    anneal->add_option("--sector", o.sector, "Constraint set defining the initial sector")->check(CLI::ExistingFile);
    anneal->add_flag("--restrict", o.restrict_to_sector, "Evolve in sector coordinates");
    anneal->add_option("--aux-field", o.aux_field, "Prepare the ground state of H_d - B Sum C_j");
    anneal->add_option("--checkpoints", o.checkpoints, "Number of checkpoints");
    anneal->add_option("--tol", o.drift_tolerance, "Per-step Hamiltonian drift tolerance");
    add_common(anneal);
    add_format(anneal);
    anneal->callback([&] { action = cmd_anneal; });

    auto *resources = app.add_subcommand("resources", "Closed-form resource counts of an encoding");
    resources->add_option("--encoding", o.encoding, "Encoding tag")->required();
    resources->add_option("--n", o.n, "Problem size")->required();
    add_common(resources);
    resources->callback([&] { action = cmd_resources; });

    auto *gf2 = app.add_subcommand("gf2", "Solve a parity system over GF(2)");
    gf2->add_option("--parities", o.parities, "Constraint set of z_parity entries")->required()->check(
        CLI::ExistingFile);
    add_common(gf2);
    gf2->callback([&] { action = cmd_gf2; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        return report_error(err, "usage", e.what(), kUsage);
    }
    try {
        return action(o, out);
    } catch (const Error &e) {
        return report_error(err, error_code_name(e.code()), e.what(), exit_code_for(e.code()));
    } catch (const std::exception &e) {
        return report_error(err, "internal", e.what(), kInternal);
    }
}

}  // namespace cqa::cli
