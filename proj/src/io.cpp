#include "npath/io.hpp"

#include <cstdio>
#include <fstream>
#include <utility>

#include <json.hpp>

#include "npath/errors.hpp"

namespace npath {

namespace {

using json_t = nlohmann::ordered_json;

[[noreturn]] void fail_parse(const std::string& where, const std::string& what) {
    throw parse_error("scenario " + where + ": " + what);
}

double number_at(const json_t& j, const std::string& where) {
    if (!j.is_number()) {
        fail_parse(where, "expected a number");
    }
    return j.get<double>();
}

Complex complex_at(const json_t& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        fail_parse(where, "expected an [re, im] pair");
    }
    return {number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]")};
}

Vector vector_at(const json_t& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        fail_parse(where, "expected a nonempty array of [re, im] pairs");
    }
    Vector v(static_cast<int>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) {
        v[static_cast<int>(k)] = complex_at(j[k], where + "[" + std::to_string(k) + "]");
    }
    return v;
}

PureJointState state_at(const json_t& amps, const json_t& dets, int n,
                        const std::string& prefix) {
    if (!amps.is_array() || static_cast<int>(amps.size()) != n) {
        fail_parse(prefix + "amplitudes", "expected n = " + std::to_string(n) + " entries");
    }
    if (!dets.is_array() || static_cast<int>(dets.size()) != n) {
        fail_parse(prefix + "detectors", "expected n = " + std::to_string(n) + " entries");
    }
    Vector c = vector_at(amps, prefix + "amplitudes");
    std::vector<Vector> d;
    d.reserve(dets.size());
    for (std::size_t k = 0; k < dets.size(); ++k) {
        d.push_back(vector_at(dets[k], prefix + "detectors[" + std::to_string(k) + "]"));
    }
    return PureJointState(PathAmplitudes(std::move(c)), DetectorSet(std::move(d)));
}

int int_field(const json_t& doc, const char* key) {
    if (!doc.contains(key)) {
        fail_parse("document", std::string("missing key \"") + key + "\"");
    }
    const json_t& j = doc.at(key);
    if (!j.is_number_integer()) {
        fail_parse(key, "expected an integer");
    }
    return j.get<int>();
}

json_t measures_json(const MeasureReport& r) {
    json_t m;
    m["coherence_C"] = r.coherence_c;
    m["distinguishability_D"] = r.dist_d;
    m["distinguishability_DQ"] = r.dist_dq;
    m["bagan_DB_bound"] = r.bagan_db_bound;
    return m;
}

json_t verdict_json(const DualityVerdict& v) {
    json_t d;
    d["sum"] = v.sum;
    d["saturated"] = v.saturated;
    d["tolerance"] = v.tolerance;
    return d;
}

void append_measures(std::string& out, const std::string& pad, const MeasureReport& r) {
    out += pad + "coherence_C: " + format_double(r.coherence_c) + "\n";
    out += pad + "distinguishability_D: " + format_double(r.dist_d) + "\n";
    out += pad + "distinguishability_DQ: " + format_double(r.dist_dq) + "\n";
    out += pad + "bagan_DB_bound: " + format_double(r.bagan_db_bound) + "\n";
}

const char* bool_text(bool x) { return x ? "true" : "false"; }

}  // namespace

Scenario load_scenario(std::istream& in) {
    json_t doc;
    try {
        doc = json_t::parse(in);
    } catch (const json_t::parse_error& e) {
        throw parse_error(std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) {
        fail_parse("document", "top level must be an object");
    }
    const int version = int_field(doc, "version");
    if (version != 1) {
        fail_parse("version", "unsupported version " + std::to_string(version) + " (expected 1)");
    }
    const int n = int_field(doc, "n");

    const bool has_ensemble = doc.contains("ensemble");
    const bool has_pure = doc.contains("amplitudes") || doc.contains("detectors");
    if (has_ensemble && has_pure) {
        fail_parse("document", "give either amplitudes/detectors or ensemble, not both");
    }
    if (has_ensemble) {
        const json_t& ens = doc.at("ensemble");
        if (!ens.is_array() || ens.empty()) {
            fail_parse("ensemble", "expected a nonempty array");
        }
        std::vector<Ensemble::Component> comps;
        comps.reserve(ens.size());
        for (std::size_t k = 0; k < ens.size(); ++k) {
            const std::string where = "ensemble[" + std::to_string(k) + "]";
            const json_t& item = ens[k];
            if (!item.is_object()) {
                fail_parse(where, "expected an object");
            }
            for (const char* key : {"weight", "amplitudes", "detectors"}) {
                if (!item.contains(key)) {
                    fail_parse(where, std::string("missing key \"") + key + "\"");
                }
            }
            const double w = number_at(item.at("weight"), where + ".weight");
            comps.push_back(Ensemble::Component{
                w, state_at(item.at("amplitudes"), item.at("detectors"), n, where + ".")});
        }
        return Ensemble(std::move(comps));
    }
    for (const char* key : {"amplitudes", "detectors"}) {
        if (!doc.contains(key)) {
            fail_parse("document", std::string("missing key \"") + key + "\"");
        }
    }
    return state_at(doc.at("amplitudes"), doc.at("detectors"), n, "");
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open scenario file: " + path);
    }
    return load_scenario(in);
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "theta,D2,C2,DB2_bound,sum_DC,sum_DBC\n";
    for (const SweepRow& r : rows) {
        out += format_double(r.theta);
        out += ',';
        out += format_double(r.d2);
        out += ',';
        out += format_double(r.c2);
        out += ',';
        out += format_double(r.db2_bound);
        out += ',';
        out += format_double(r.sum_dc);
        out += ',';
        out += format_double(r.sum_dbc);
        out += '\n';
    }
    return out;
}

std::string random_sweep_csv(const std::vector<MeasureReport>& reports) {
    std::string out = "sample,D2,C2,DQ,sum_DC\n";
    int k = 0;
    for (const MeasureReport& r : reports) {
        out += std::to_string(k++);
        out += ',';
        out += format_double(r.dist_d * r.dist_d);
        out += ',';
        out += format_double(r.coherence_c * r.coherence_c);
        out += ',';
        out += format_double(r.dist_dq);
        out += ',';
        out += format_double(r.duality_sum);
        out += '\n';
    }
    return out;
}

std::string scenario_report(const Scenario& sc, bool as_json) {
    if (std::holds_alternative<PureJointState>(sc)) {
        const PureJointState& s = std::get<PureJointState>(sc);
        const DualityVerdict v = check_pure_duality(s);
        const bool feasible = uqsd_feasible(s.detectors());
        if (as_json) {
            json_t doc;
            doc["n"] = v.detail.n;
            doc["measures"] = measures_json(v.detail);
            doc["duality"] = verdict_json(v);
            doc["uqsd_feasible"] = feasible;
            return doc.dump(2) + "\n";
        }
        std::string out;
        out += "n: " + std::to_string(v.detail.n) + "\n";
        append_measures(out, "", v.detail);
        out += "duality_sum: " + format_double(v.sum) + "\n";
        out += std::string("saturated: ") + bool_text(v.saturated) + "\n";
        out += "tolerance: " + format_double(v.tolerance) + "\n";
        out += std::string("uqsd_feasible: ") + bool_text(feasible) + "\n";
        return out;
    }

    const Ensemble& e = std::get<Ensemble>(sc);
    const DualityVerdict v = check_mixed_duality(e);
    if (as_json) {
        json_t doc;
        doc["n"] = v.detail.n;
        json_t comps = json_t::array();
        for (const Ensemble::Component& comp : e.components()) {
            json_t cj;
            cj["weight"] = comp.weight;
            cj["measures"] = measures_json(full_report(comp.state));
            cj["uqsd_feasible"] = uqsd_feasible(comp.state.detectors());
            comps.push_back(std::move(cj));
        }
        doc["components"] = std::move(comps);
        doc["measures"] = measures_json(v.detail);
        doc["duality"] = verdict_json(v);
        return doc.dump(2) + "\n";
    }
    std::string out;
    out += "n: " + std::to_string(v.detail.n) + "\n";
    int k = 0;
    for (const Ensemble::Component& comp : e.components()) {
        out += "component " + std::to_string(k++) + ":\n";
        out += "  weight: " + format_double(comp.weight) + "\n";
        append_measures(out, "  ", full_report(comp.state));
        out += std::string("  uqsd_feasible: ") +
               bool_text(uqsd_feasible(comp.state.detectors())) + "\n";
    }
    out += "mixture:\n";
    append_measures(out, "  ", v.detail);
    out += "  duality_sum: " + format_double(v.sum) + "\n";
    out += std::string("  saturated: ") + bool_text(v.saturated) + "\n";
    out += "  tolerance: " + format_double(v.tolerance) + "\n";
    return out;
}

bool scenario_passes(const Scenario& sc) {
    if (std::holds_alternative<PureJointState>(sc)) {
        return check_pure_duality(std::get<PureJointState>(sc)).saturated;
    }
    const DualityVerdict v = check_mixed_duality(std::get<Ensemble>(sc));
    return v.sum <= 1.0 + v.tolerance;
}

std::string durr_text(const DurrReport& rep) {
    std::string out;
    out += std::string("continuity_ok: ") + bool_text(rep.continuity_ok) + "\n";
    out += std::string("global_max_ok: ") + bool_text(rep.global_max_ok) + "\n";
    out += std::string("global_min_ok: ") + bool_text(rep.global_min_ok) + "\n";
    out += std::string("monotonicity_ok: ") + bool_text(rep.monotonicity_ok) + "\n";
    out += "probe_count: " + std::to_string(rep.probe_count) + "\n";
    out += std::string("all_ok: ") + bool_text(rep.all_ok()) + "\n";
    return out;
}

}  // namespace npath
