#include "genusforge/surgery.hpp"

#include <json.hpp>

#include <sstream>

namespace genusforge {

using nlohmann::ordered_json;

namespace {

const char* verdict_name(CrossSectionReport::Verdict v) {
    switch (v) {
    case CrossSectionReport::Verdict::Satisfied: return "satisfied";
    case CrossSectionReport::Verdict::NotSatisfied: return "not satisfied";
    case CrossSectionReport::Verdict::RationalOnly: return "rationally trivial";
    }
    return "?";
}

ordered_json bound_json(const BoundPath& path) {
    ordered_json out;
    if (path.available) {
        out["max_k"] = path.max_k;
        out["pass"] = path.pass;
    } else {
        out["reason"] = path.reason;
        out["pass"] = false;
    }
    return out;
}

ordered_json gates_json(const GateReport& gate, const CrossSectionReport& cs, const PscReport& psc) {
    ordered_json out;
    out["simply_connected"] = gate.simply_connected;
    out["spin"] = gate.spin;
    out["nonzero_pontryagin"] = gate.has_nonzero_pontryagin;
    out["k_positive"] = gate.k_positive;
    out["parity"] = gate.parity;
    out["l_group"] = to_string(l_group(gate.d + gate.k));
    out["bounds"] = ordered_json{{"bl", bound_json(gate.bl)}, {"morlet", bound_json(gate.morlet)}};
    out["via"] = gate.via;
    out["overall"] = gate.overall;
    out["cross_section"] =
        ordered_json{{"verdict", verdict_name(cs.verdict)}, {"reason", cs.reason}};
    ordered_json psc_json;
    psc_json["applicable"] = psc.applicable;
    if (psc.ahat)
        psc_json["ahat"] = psc.ahat->str();
    psc_json["no_psc_metric"] = psc.no_psc_metric;
    psc_json["reason"] = psc.reason;
    out["psc"] = psc_json;
    return out;
}

void append_gates_pretty(std::ostringstream& out, const GateReport& gate,
                         const CrossSectionReport& cs, const PscReport& psc) {
    const auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    out << "gates:\n";
    out << "  simply connected:   " << mark(gate.simply_connected) << "\n";
    out << "  spin:               " << mark(gate.spin) << "\n";
    out << "  nonzero pontryagin: " << mark(gate.has_nonzero_pontryagin) << "\n";
    out << "  k >= 1:             " << mark(gate.k_positive) << "\n";
    out << "  (d+k) = 0 mod 4:    " << mark(gate.parity) << "  (L_" << gate.d + gate.k << " = "
        << to_string(l_group(gate.d + gate.k)) << ")\n";
    out << "  bl bound:           max k = " << gate.bl.max_k << " -> " << mark(gate.bl.pass)
        << "\n";
    if (gate.morlet.available)
        out << "  morlet bound:       max k = " << gate.morlet.max_k << " -> "
            << mark(gate.morlet.pass) << "\n";
    else
        out << "  morlet bound:       unavailable (" << gate.morlet.reason << ")\n";
    out << "  overall:            " << (gate.overall ? "PASS" : "FAIL");
    if (!gate.via.empty())
        out << " via " << gate.via;
    out << "\n";
    out << "cross-section: " << verdict_name(cs.verdict) << " (" << cs.reason << ")\n";
    out << "psc: ";
    if (psc.applicable) {
        out << "Ahat(M) = " << psc.ahat->str() << " -> " << psc.reason << "\n";
    } else {
        out << psc.reason << "\n";
    }
}

} // namespace

std::string certificate_json_string(const ConstructionCertificate& cert) {
    ordered_json doc;
    doc["input"] = ordered_json{
        {"manifold", cert.manifold_name}, {"k", cert.k}, {"lambda", cert.lambda}};
    doc["m"] = cert.m;
    doc["j"] = cert.j;
    doc["A"] = cert.a.str();
    doc["A_solved"] = cert.a_solved;
    doc["sigma"] = cert.sigma.str();
    ordered_json census = ordered_json::object();
    for (const auto& [partition, value] : cert.census)
        census[partition.json_key()] = value.str();
    doc["pontryagin_numbers"] = census;
    doc["ahat_E"] = cert.ahat_e.str();
    doc["gates"] = gates_json(cert.gate, cert.cross_section, cert.psc);
    doc["warnings"] = cert.warnings;
    return doc.dump(2) + "\n";
}

std::string certificate_pretty_string(const ConstructionCertificate& cert) {
    std::ostringstream out;
    out << "construct: " << cert.manifold_name << "  (k = " << cert.k
        << ", lambda = " << cert.lambda << ")\n";
    out << "m = " << cert.m << ", j = " << cert.j << ", b = " << cert.b.str()
        << ", c = " << cert.c.str() << "\n";
    out << "A = " << cert.a.str() << (cert.a_solved ? " (solved)" : " (supplied)") << "\n";
    out << "sigma = " << cert.sigma.str() << "\n";
    out << "pontryagin numbers:\n";
    for (const auto& [partition, value] : cert.census)
        out << "  " << partition.monomial() << " = " << value.str() << "\n";
    out << "Ahat(E) = " << cert.ahat_e.str() << "\n";
    append_gates_pretty(out, cert.gate, cert.cross_section, cert.psc);
    for (const auto& w : cert.warnings)
        out << "warning: " << w << "\n";
    return out.str();
}

std::string gate_json_string(const ManifoldData& m, const GateReport& gate,
                             const CrossSectionReport& cs, const PscReport& psc) {
    ordered_json doc;
    doc["manifold"] = m.name();
    doc["d"] = gate.d;
    doc["k"] = gate.k;
    doc["gates"] = gates_json(gate, cs, psc);
    return doc.dump(2) + "\n";
}

std::string gate_pretty_string(const ManifoldData& m, const GateReport& gate,
                               const CrossSectionReport& cs, const PscReport& psc) {
    std::ostringstream out;
    out << "gate: " << m.name() << "  (d = " << gate.d << ", k = " << gate.k << ")\n";
    append_gates_pretty(out, gate, cs, psc);
    return out.str();
}

} // namespace genusforge
