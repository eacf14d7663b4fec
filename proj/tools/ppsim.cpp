// Copyright 2026 The ppsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: generates sequence sets, builds field ensembles
// and runs the correlation and entropy analyses with machine-readable
// output. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppsim/entropy.hpp"
#include "ppsim/errors.hpp"
#include "ppsim/field.hpp"
#include "ppsim/io.hpp"
#include "ppsim/measure.hpp"

namespace {

using namespace ppsim;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr double kClaimTolerance = 1e-9;

/// Accepts plain floats plus "pi" expressions: "pi", "-pi/4", "3pi/2", "0.5pi".
double parse_angle(const std::string &token) {
    std::string t = token;
    double value = 0.0;
    size_t pi_pos = t.find("pi");
    if (pi_pos == std::string::npos) {
        size_t used = 0;
        value = std::stod(t, &used);
        if (used != t.size()) {
            throw std::invalid_argument("bad angle '" + token + "'");
        }
    } else {
        double coeff = 1.0;
        std::string head = t.substr(0, pi_pos);
        if (head == "-") {
            coeff = -1.0;
        } else if (!head.empty() && head != "+") {
            coeff = std::stod(head);
        }
        double divisor = 1.0;
        std::string tail = t.substr(pi_pos + 2);
        if (!tail.empty()) {
            if (tail[0] != '/') {
                throw std::invalid_argument("bad angle '" + token + "'");
            }
            divisor = std::stod(tail.substr(1));
        }
        value = coeff * std::numbers::pi / divisor;
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("angle '" + token + "' is not finite");
    }
    return value;
}

std::vector<double> parse_angle_list(const std::string &csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) {
            out.push_back(parse_angle(token));
        }
    }
    return out;
}

void write_output(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

std::shared_ptr<const PpsSet> build_set(int s, const std::vector<uint8_t> &poly_labels) {
    PrimitivePoly poly = poly_labels.empty() ? PrimitivePoly::default_for_degree(s)
                                             : PrimitivePoly::from_labels(poly_labels);
    return std::make_shared<const PpsSet>(PpsSet::build(poly));
}

FieldEnsemble build_kind(std::shared_ptr<const PpsSet> pps, EnsembleKind kind, size_t n,
                         std::vector<size_t> indices) {
    if (kind == EnsembleKind::Ghz) {
        if (indices.empty()) {
            indices = choose_ghz_indices(*pps, n);
        }
        return make_ghz(std::move(pps), indices);
    }
    if (indices.empty()) {
        indices = {1, 2};
    }
    if (indices.size() != 2) {
        throw std::invalid_argument("two-party ensembles need exactly 2 indices");
    }
    if (kind == EnsembleKind::Product) {
        return make_product(std::move(pps), indices[0], indices[1]);
    }
    return make_bell(std::move(pps), indices[0], indices[1], kind);
}

void export_ensemble(const FieldEnsemble &ens, const std::string &path) {
    if (!path.empty()) {
        write_output(canonical_dump(ensemble_to_json(ens)), path);
    }
}

FieldEnsemble load_ensemble(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read ensemble file " + path);
    }
    nlohmann::json doc = nlohmann::json::parse(in);
    return ensemble_from_json(doc);
}

struct ClaimLine {
    std::string name;
    double claimed;
    double measured;
    double tolerance;

    bool ok() const { return std::abs(measured - claimed) <= tolerance; }
};

void print_claims(std::ostream &out, const std::vector<ClaimLine> &claims) {
    for (const ClaimLine &c : claims) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-34s claimed % .9f  measured % .12g  %s", c.name.c_str(),
                      c.claimed, c.measured, c.ok() ? "PASS" : "FAIL");
        out << buf << "\n";
    }
}

bool all_ok(const std::vector<ClaimLine> &claims) {
    for (const ClaimLine &c : claims) {
        if (!c.ok()) {
            return false;
        }
    }
    return true;
}

int cmd_gen(int s, const std::vector<uint8_t> &poly_labels, const std::string &out_path) {
    auto pps = build_set(s, poly_labels);
    for (size_t j = 1; j < pps->size(); j++) {
        if (!pps->sequence(j).balanced()) {
            std::cerr << "balance violated at sequence " << j << "\n";
            return kExitVerificationFailure;
        }
    }
    double gram = pps->gram_max_off_diagonal();
    std::cerr << "polynomial: " << pps->polynomial().to_string() << "\n"
              << "sequences:  " << pps->size() << " of length " << pps->size() << "\n"
              << "balance:    every label exactly " << (pps->size() / 4) << " times per sequence (ok)\n"
              << "gram check: max |off-diagonal| = " << gram << "\n";
    if (gram > 1e-12) {
        std::cerr << "            nonzero pairs sit at shift distance (N-1)/3; the quaternary\n"
                     "            phase alphabet cannot null these, see README\n";
    }
    write_output(canonical_dump(pps_to_json(*pps)), out_path);
    return kExitOk;
}

int cmd_chsh(int s, const std::vector<uint8_t> &poly_labels, const std::string &variant,
             const std::string &angles_csv, std::vector<size_t> indices, const std::string &format,
             const std::string &out_path, const std::string &export_path) {
    EnsembleKind kind = ensemble_kind_from_string(variant);
    if (kind == EnsembleKind::Ghz) {
        throw std::invalid_argument("chsh needs a two-party ensemble kind");
    }
    auto pps = build_set(s, poly_labels);
    FieldEnsemble ens = build_kind(pps, kind, 2, std::move(indices));
    export_ensemble(ens, export_path);

    std::array<double, 4> angles{};
    if (angles_csv.empty()) {
        angles = chsh_max_angles(is_bell(kind) ? kind : EnsembleKind::BellPsiPlus);
    } else {
        std::vector<double> parsed = parse_angle_list(angles_csv);
        if (parsed.size() != 4) {
            throw std::invalid_argument("chsh needs 4 angles: theta_a,theta_a',theta_b,theta_b'");
        }
        std::copy(parsed.begin(), parsed.end(), angles.begin());
    }

    auto e_at = [&](double x, double y) {
        std::vector<double> th{x, y};
        return correlate(ens, th).value;
    };
    double e_ab = e_at(angles[0], angles[2]);
    double e_ab2 = e_at(angles[0], angles[3]);
    double e_a2b2 = e_at(angles[1], angles[3]);
    double e_a2b = e_at(angles[1], angles[2]);
    double b = std::abs(e_ab - e_ab2 + e_a2b2 + e_a2b);
    double bound = 2.0 * std::numbers::sqrt2;

    std::ostringstream report;
    report << "kind:   " << to_string(kind) << "  indices: (" << ens.fields[0].pps_index << ", "
           << ens.fields[1].pps_index << ")\n";
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "E(a,b) = % .12f\nE(a,b') = % .12f\nE(a',b') = % .12f\nE(a',b) = % .12f\n|B| = %.12f\n",
                  e_ab, e_ab2, e_a2b2, e_a2b, b);
    report << buf;

    bool pass;
    if (is_bell(kind)) {
        pass = std::abs(b - bound) <= kClaimTolerance;
        std::snprintf(buf, sizeof buf, "target 2*sqrt(2) = %.12f: %s\n", bound, pass ? "PASS" : "FAIL");
    } else {
        pass = b <= 2.0 + kClaimTolerance;
        std::snprintf(buf, sizeof buf, "classical bound |B| <= 2: %s\n", pass ? "PASS" : "FAIL");
    }
    report << buf;

    if (format == "json") {
        ordered_json doc;
        doc["kind"] = to_string(kind);
        doc["angles"] = std::vector<double>(angles.begin(), angles.end());
        doc["E"] = {e_ab, e_ab2, e_a2b2, e_a2b};
        doc["B"] = b;
        doc["pass"] = pass;
        write_output(canonical_dump(doc), out_path);
    } else {
        write_output(report.str(), out_path);
    }
    return pass ? kExitOk : kExitVerificationFailure;
}

int cmd_ghz(int s, const std::vector<uint8_t> &poly_labels, size_t n, const std::string &angles_csv,
            std::vector<size_t> indices, const std::string &out_path, const std::string &export_path,
            size_t grid_points, size_t party) {
    auto pps = build_set(s, poly_labels);
    if (n > pps->size()) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the " +
                                    std::to_string(pps->size()) + " available sequences");
    }
    FieldEnsemble ens = build_kind(pps, EnsembleKind::Ghz, n, std::move(indices));
    export_ensemble(ens, export_path);

    std::ostringstream report;
    report << "indices:";
    for (size_t i : ens.indices()) {
        report << " " << i;
    }
    report << "\n";

    std::vector<ClaimLine> claims;
    std::vector<double> zero(n, 0.0);
    claims.push_back({"E at zero-sum angles", 1.0, correlate(ens, zero).value, kClaimTolerance});
    std::vector<double> pi_first(n, 0.0);
    pi_first[0] = std::numbers::pi;
    claims.push_back({"E at pi-sum angles", -1.0, correlate(ens, pi_first).value, kClaimTolerance});

    if (!angles_csv.empty()) {
        std::vector<double> angles = parse_angle_list(angles_csv);
        CorrelationResult r = correlate(ens, angles);
        char buf[120];
        std::snprintf(buf, sizeof buf, "E(given angles) = % .12f   (C = %g)\n", r.value, r.normalization);
        report << buf;
    }

    // Two-party marginals for the first two pair shapes; grid maxima.
    const double grid[] = {0.0, 0.37, 1.21, 2.9};
    for (auto [pa, pb] : {std::pair<size_t, size_t>{0, 1}, std::pair<size_t, size_t>{0, 2}}) {
        double worst = 0.0;
        for (double ta : grid) {
            for (double tb : grid) {
                worst = std::max(worst, std::abs(marginal_correlate(ens, {pa, pb}, ta, tb).value));
            }
        }
        claims.push_back({"marginal (" + std::to_string(pa) + "," + std::to_string(pb) + ") max |E|",
                          0.0, worst, kClaimTolerance});
    }

    print_claims(report, claims);

    if (grid_points > 0) {
        // optional sweep CSV to --out, the report itself goes to stdout
        if (grid_points < 2) {
            throw std::invalid_argument("sweep grid needs at least 2 points");
        }
        std::vector<double> fixed(n, 0.0);
        std::vector<double> grid(grid_points);
        for (size_t i = 0; i < grid_points; i++) {
            grid[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_points);
        }
        auto sweep = correlation_sweep(ens, fixed, party, grid);
        std::vector<double> analytic(sweep.size());
        std::vector<double> angles = fixed;
        for (size_t i = 0; i < sweep.size(); i++) {
            angles[party] = sweep[i].first;
            analytic[i] = closed_form_correlation(ens.kind, angles);
        }
        write_output(sweep_to_csv(sweep, analytic), out_path);
        std::cout << report.str();
    } else {
        write_output(report.str(), out_path);
    }
    return all_ok(claims) ? kExitOk : kExitVerificationFailure;
}

int cmd_entropy(int s, const std::vector<uint8_t> &poly_labels, const std::string &kind_name,
                std::vector<size_t> indices, const std::string &out_path, const std::string &in_path,
                bool print_rho) {
    FieldEnsemble ens;
    if (!in_path.empty()) {
        ens = load_ensemble(in_path);
    } else {
        auto pps = build_set(s, poly_labels);
        EnsembleKind kind;
        size_t n = 2;
        if (kind_name.rfind("ghz-", 0) == 0) {
            kind = EnsembleKind::Ghz;
            n = static_cast<size_t>(std::stoul(kind_name.substr(4)));
        } else {
            kind = ensemble_kind_from_string(kind_name);
            if (kind == EnsembleKind::Ghz) {
                throw std::invalid_argument("use ghz-<n> to size the GHZ ensemble");
            }
        }
        ens = build_kind(pps, kind, n, std::move(indices));
    }
    auto report = entanglement_report(ens);

    std::ostringstream out;
    out << "kind: " << kind_name << "  indices:";
    for (size_t i : ens.indices()) {
        out << " " << i;
    }
    out << "\n";
    for (const auto &[mask, entropy] : report) {
        char buf[80];
        std::snprintf(buf, sizeof buf, "S(%-9s) = %.12f\n",
                      Bipartition(ens.size(), mask).label().c_str(), entropy);
        out << buf;
    }
    if (print_rho) {
        if (ens.size() > 4) {
            throw std::invalid_argument("density matrix printing is readable up to 4 parties");
        }
        out << "rho:\n" << pretty_print(density_matrix(assemble_mode_state(ens)));
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

int cmd_sweep(int s, const std::vector<uint8_t> &poly_labels, const std::string &kind_name, size_t n,
              size_t party, size_t grid_points, const std::string &fixed_csv,
              std::vector<size_t> indices, const std::string &format, const std::string &out_path) {
    if (grid_points < 2) {
        throw std::invalid_argument("sweep needs a grid of at least 2 points");
    }
    auto pps = build_set(s, poly_labels);
    EnsembleKind kind;
    if (kind_name.rfind("ghz-", 0) == 0) {
        kind = EnsembleKind::Ghz;
        n = static_cast<size_t>(std::stoul(kind_name.substr(4)));
    } else {
        kind = ensemble_kind_from_string(kind_name);
        n = 2;
    }
    FieldEnsemble ens = build_kind(pps, kind, n, std::move(indices));

    std::vector<double> fixed(ens.size(), 0.0);
    if (!fixed_csv.empty()) {
        fixed = parse_angle_list(fixed_csv);
        if (fixed.size() != ens.size()) {
            throw std::invalid_argument("need one fixed angle per field");
        }
    }
    std::vector<double> grid(grid_points);
    for (size_t i = 0; i < grid_points; i++) {
        grid[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_points);
    }
    auto sweep = correlation_sweep(ens, fixed, party, grid);

    std::vector<double> analytic(sweep.size());
    std::vector<double> angles = fixed;
    for (size_t i = 0; i < sweep.size(); i++) {
        angles[party] = sweep[i].first;
        analytic[i] = closed_form_correlation(ens.kind, angles);
    }
    if (format == "json") {
        ordered_json doc;
        doc["kind"] = to_string(ens.kind);
        doc["party"] = party;
        ordered_json rows = ordered_json::array();
        double worst = 0.0;
        for (size_t i = 0; i < sweep.size(); i++) {
            double err = std::abs(sweep[i].second - analytic[i]);
            worst = std::max(worst, err);
            rows.push_back({sweep[i].first, sweep[i].second, analytic[i], err});
        }
        doc["rows"] = std::move(rows);
        doc["max_abs_error"] = worst;
        write_output(canonical_dump(doc), out_path);
    } else {
        write_output(sweep_to_csv(sweep, analytic), out_path);
    }
    return kExitOk;
}

int cmd_correlate(int s, const std::vector<uint8_t> &poly_labels, const std::string &kind_name,
                  const std::string &angles_csv, std::vector<size_t> indices,
                  const std::string &out_path, const std::string &in_path) {
    std::vector<double> angles = parse_angle_list(angles_csv);
    FieldEnsemble ens;
    if (!in_path.empty()) {
        ens = load_ensemble(in_path);
    } else {
        auto pps = build_set(s, poly_labels);
        EnsembleKind kind;
        size_t n = angles.size();
        if (kind_name.rfind("ghz-", 0) == 0) {
            kind = EnsembleKind::Ghz;
            n = static_cast<size_t>(std::stoul(kind_name.substr(4)));
        } else {
            kind = ensemble_kind_from_string(kind_name);
            n = 2;
        }
        ens = build_kind(pps, kind, n, std::move(indices));
    }
    CorrelationResult r = correlate(ens, angles);
    write_output(canonical_dump(correlation_to_json(ens, angles, r)), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"classical-field entanglement simulation over quaternary phase sequences"};
    app.require_subcommand(1);

    int s = 2;
    std::vector<uint8_t> poly;
    std::string out_path;
    std::string angles_csv;
    std::string format = "text";
    std::string sweep_format = "csv";
    std::string variant = "psi+";
    std::string kind = "psi+";
    std::vector<size_t> indices;
    size_t n = 3;
    size_t party = 0;
    size_t grid_points = 0;
    std::string fixed_csv;
    std::string export_path;
    std::string in_path;
    bool print_rho = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--s", s, "sequence degree (N = 4^s)")->check(CLI::Range(1, 5));
        cmd->add_option("--poly", poly, "polynomial labels c0,c1,... (default: shipped table)");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--indices", indices, "sequence indices for the ensemble");
    };

    CLI::App *gen = app.add_subcommand("gen", "generate a sequence set and report its checks");
    add_common(gen);

    CLI::App *chsh_cmd = app.add_subcommand("chsh", "four-angle Bell test");
    add_common(chsh_cmd);
    chsh_cmd->add_option("--variant", variant, "psi+ psi- phi+ phi- product");
    chsh_cmd->add_option("--angles", angles_csv, "theta_a,theta_a',theta_b,theta_b'");
    chsh_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    chsh_cmd->add_option("--export", export_path, "write the ensemble JSON to this file");

    CLI::App *ghz_cmd = app.add_subcommand("ghz", "n-party correlation and marginal checks");
    add_common(ghz_cmd);
    ghz_cmd->add_option("--n", n, "party count (>= 3)");
    ghz_cmd->add_option("--angles", angles_csv, "optional analyzer angles");
    ghz_cmd->add_option("--export", export_path, "write the ensemble JSON to this file");
    ghz_cmd->add_option("--grid", grid_points, "also sweep one analyzer over this many points");
    ghz_cmd->add_option("--party", party, "analyzer to sweep when --grid is given");

    CLI::App *entropy_cmd = app.add_subcommand("entropy", "entanglement entropy per bipartition");
    add_common(entropy_cmd);
    entropy_cmd->add_option("--kind", kind, "product psi+ psi- phi+ phi- ghz-<n>");
    entropy_cmd->add_option("--in", in_path, "read the ensemble from a JSON file instead");
    entropy_cmd->add_flag("--print-rho", print_rho, "append the full density matrix (up to 4 parties)");

    CLI::App *sweep_cmd = app.add_subcommand("sweep", "sweep of one analyzer angle");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--kind", kind, "product psi+ psi- phi+ phi- ghz-<n>");
    sweep_cmd->add_option("--party", party, "which analyzer to sweep");
    sweep_cmd->add_option("--grid", grid_points, "number of grid points over [0, 2pi)")->required();
    sweep_cmd->add_option("--fixed", fixed_csv, "fixed angles for the other parties");
    sweep_cmd->add_option("--format", sweep_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App *corr_cmd = app.add_subcommand("correlate", "single correlation record as JSON");
    add_common(corr_cmd);
    corr_cmd->add_option("--kind", kind, "product psi+ psi- phi+ phi- ghz-<n>");
    corr_cmd->add_option("--angles", angles_csv, "one angle per party")->required();
    corr_cmd->add_option("--in", in_path, "read the ensemble from a JSON file instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(s, poly, out_path);
        }
        if (chsh_cmd->parsed()) {
            return cmd_chsh(s, poly, variant, angles_csv, indices, format, out_path, export_path);
        }
        if (ghz_cmd->parsed()) {
            return cmd_ghz(s, poly, n, angles_csv, indices, out_path, export_path, grid_points, party);
        }
        if (entropy_cmd->parsed()) {
            return cmd_entropy(s, poly, kind, indices, out_path, in_path, print_rho);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(s, poly, kind, n, party, grid_points, fixed_csv, indices, sweep_format,
                             out_path);
        }
        if (corr_cmd->parsed()) {
            return cmd_correlate(s, poly, kind, angles_csv, indices, out_path, in_path);
        }
    } catch (const VerificationError &e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
