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

#include "ppsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ppsim/errors.hpp"

namespace ppsim {

namespace {

constexpr const char *kPpsFormat = "ppsim.pps.v1";
constexpr const char *kEnsembleFormat = "ppsim.ensemble.v1";

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string canonical_dump(const ordered_json &doc) {
    return doc.dump(2) + "\n";
}

ordered_json pps_to_json(const PpsSet &set) {
    ordered_json doc;
    doc["format"] = kPpsFormat;
    doc["s"] = set.degree();
    doc["N"] = set.size();
    ordered_json poly = ordered_json::array();
    for (const Gf4 &c : set.polynomial().coeffs) {
        poly.push_back(c.label());
    }
    doc["poly"] = std::move(poly);
    ordered_json seqs = ordered_json::array();
    for (size_t j = 0; j < set.size(); j++) {
        ordered_json seq = ordered_json::array();
        for (uint8_t u : set.sequence(j).units) {
            seq.push_back(u);
        }
        seqs.push_back(std::move(seq));
    }
    doc["sequences"] = std::move(seqs);
    return doc;
}

PpsSet pps_from_json(const nlohmann::json &doc) {
    if (!doc.contains("format") || doc["format"] != kPpsFormat) {
        throw std::invalid_argument("not a ppsim sequence-set document");
    }
    std::vector<uint8_t> labels = doc.at("poly").get<std::vector<uint8_t>>();
    PpsSet set = PpsSet::build(PrimitivePoly::from_labels(labels));
    // The sequences are regenerated from the polynomial; verify the document
    // matches rather than trusting its payload.
    auto stored = doc.at("sequences").get<std::vector<std::vector<uint8_t>>>();
    if (stored.size() != set.size()) {
        throw VerificationError("sequence count mismatch: document has " + std::to_string(stored.size()) +
                                ", polynomial generates " + std::to_string(set.size()));
    }
    for (size_t j = 0; j < stored.size(); j++) {
        if (stored[j] != set.sequence(j).units) {
            throw VerificationError("sequence " + std::to_string(j) +
                                    " in document does not match its generator");
        }
    }
    return set;
}

ordered_json ensemble_to_json(const FieldEnsemble &ens) {
    ordered_json doc;
    doc["format"] = kEnsembleFormat;
    doc["kind"] = to_string(ens.kind);
    ordered_json pps;
    pps["s"] = ens.pps->degree();
    ordered_json poly = ordered_json::array();
    for (const Gf4 &c : ens.pps->polynomial().coeffs) {
        poly.push_back(c.label());
    }
    pps["poly"] = std::move(poly);
    doc["pps"] = std::move(pps);
    ordered_json fields = ordered_json::array();
    for (const ClassicalField &f : ens.fields) {
        ordered_json field;
        field["pps_index"] = f.pps_index;
        ordered_json units = ordered_json::array();
        for (const FieldUnit &u : f.units) {
            units.push_back({u.mode0.real(), u.mode0.imag(), u.mode1.real(), u.mode1.imag()});
        }
        field["units"] = std::move(units);
        fields.push_back(std::move(field));
    }
    doc["fields"] = std::move(fields);
    return doc;
}

FieldEnsemble ensemble_from_json(const nlohmann::json &doc) {
    if (!doc.contains("format") || doc["format"] != kEnsembleFormat) {
        throw std::invalid_argument("not a ppsim ensemble document");
    }
    FieldEnsemble ens;
    ens.kind = ensemble_kind_from_string(doc.at("kind").get<std::string>());
    std::vector<uint8_t> labels = doc.at("pps").at("poly").get<std::vector<uint8_t>>();
    ens.pps = std::make_shared<const PpsSet>(PpsSet::build(PrimitivePoly::from_labels(labels)));
    for (const auto &field_doc : doc.at("fields")) {
        ClassicalField f;
        f.pps_index = field_doc.at("pps_index").get<size_t>();
        if (f.pps_index >= ens.pps->size()) {
            throw std::invalid_argument("field references sequence " + std::to_string(f.pps_index) +
                                        " outside the set");
        }
        for (const auto &row : field_doc.at("units")) {
            if (row.size() != 4) {
                throw std::invalid_argument("field unit rows must be [re0, im0, re1, im1]");
            }
            f.units.push_back({{row[0].get<double>(), row[1].get<double>()},
                               {row[2].get<double>(), row[3].get<double>()}});
        }
        ens.fields.push_back(std::move(f));
    }
    return ens;
}

ordered_json correlation_to_json(const FieldEnsemble &ens, const std::vector<double> &angles,
                                 const CorrelationResult &result) {
    ordered_json doc;
    doc["kind"] = to_string(ens.kind);
    doc["angles"] = angles;
    doc["E"] = result.value;
    doc["C"] = result.normalization;
    doc["N"] = ens.fields.empty() ? 0 : ens.fields[0].size();
    return doc;
}

ordered_json mode_state_to_json(const ModeState &state) {
    ordered_json doc;
    doc["parties"] = state.parties;
    ordered_json amp = ordered_json::array();
    for (const auto &z : state.amplitudes) {
        amp.push_back({z.real(), z.imag()});
    }
    doc["amplitudes"] = std::move(amp);
    return doc;
}

ordered_json density_matrix_to_json(const DensityMatrix &rho) {
    ordered_json doc;
    doc["parties"] = rho.parties();
    doc["dim"] = rho.dim();
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < rho.dim(); r++) {
        ordered_json row = ordered_json::array();
        for (size_t c = 0; c < rho.dim(); c++) {
            row.push_back({rho.at(r, c).real(), rho.at(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

std::string pretty_print(const DensityMatrix &rho) {
    std::ostringstream out;
    for (size_t r = 0; r < rho.dim(); r++) {
        for (size_t c = 0; c < rho.dim(); c++) {
            const auto &z = rho.at(r, c);
            char buf[48];
            std::snprintf(buf, sizeof buf, "%8.4f%+8.4fi", z.real(), z.imag());
            out << buf << (c + 1 < rho.dim() ? "  " : "");
        }
        out << "\n";
    }
    return out.str();
}

std::string sweep_to_csv(const std::vector<std::pair<double, double>> &sweep,
                         const std::vector<double> &analytic) {
    if (analytic.size() != sweep.size()) {
        throw std::invalid_argument("analytic column length mismatch");
    }
    std::ostringstream out;
    out << "theta,E_empirical,E_analytic,abs_error\n";
    double worst = 0.0;
    for (size_t i = 0; i < sweep.size(); i++) {
        double err = std::abs(sweep[i].second - analytic[i]);
        worst = std::max(worst, err);
        out << format_double(sweep[i].first) << "," << format_double(sweep[i].second) << ","
            << format_double(analytic[i]) << "," << format_double(err) << "\n";
    }
    out << "# max_abs_error = " << format_double(worst) << "\n";
    return out.str();
}

}  // namespace ppsim
