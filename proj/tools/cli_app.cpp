#include "cli_app.hpp"

#include "genusforge/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace genusforge::cli {

using nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;

    std::string kind = "L";
    int order = 0;
    int degree = 1;
    std::string manifold_path;
    int k = 0;
    long long lambda = 1;
    std::optional<std::string> a_literal;
    std::optional<int> connectivity;
    int d = 0;
    std::string which;
    std::string range;
    int n = 0;
    std::string out_path;
};

SeriesKind parse_kind(const std::string& kind) {
    if (kind == "L")
        return SeriesKind::L;
    if (kind == "Ahat")
        return SeriesKind::Ahat;
    throw ValidationError("unknown kind \"" + kind + "\" (expected L or Ahat)");
}

std::pair<long long, long long> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    if (sep == std::string::npos)
        throw ValidationError("range must look like A..B, got \"" + text + "\"");
    try {
        size_t pos_a = 0, pos_b = 0;
        const std::string first = text.substr(0, sep), second = text.substr(sep + 2);
        const long long a = std::stoll(first, &pos_a);
        const long long b = std::stoll(second, &pos_b);
        if (pos_a != first.size() || pos_b != second.size() || a > b)
            throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::exception&) {
        throw ValidationError("range must look like A..B with integers A <= B, got \"" + text +
                              "\"");
    }
}

std::string term_joined(const std::vector<std::pair<Rational, std::string>>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [coeff, symbol] : terms) {
        if (coeff.is_zero() && terms.size() > 1)
            continue;
        Rational printed = coeff;
        if (first) {
            first = false;
        } else if (coeff.sign() < 0) {
            out << " - ";
            printed = -coeff;
        } else {
            out << " + ";
        }
        if (symbol.empty())
            out << printed.str();
        else if (printed == Rational(1))
            out << symbol;
        else
            out << printed.str() << "·" << symbol;
    }
    if (first)
        out << "0";
    return out.str();
}

void cmd_series(const Options& opt, std::ostream& out) {
    const SeriesKind kind = parse_kind(opt.kind);
    const PowerSeries series = characteristic_series(kind, opt.order);
    if (opt.json) {
        ordered_json doc;
        doc["kind"] = opt.kind;
        doc["order"] = opt.order;
        doc["coefficients"] = ordered_json::array();
        for (const Rational& c : series.coefficients())
            doc["coefficients"].push_back(c.str());
        out << doc.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<Rational, std::string>> terms;
    for (int i = 0; i <= series.truncation_order(); ++i) {
        std::string symbol = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        terms.emplace_back(series.coeff(i), std::move(symbol));
    }
    out << opt.kind << "(z) = " << term_joined(terms) << "\n";
}

void cmd_genus(const Options& opt, std::ostream& out) {
    const SeriesKind kind = parse_kind(opt.kind);
    const GenusTable& table = genus_polynomial(kind, opt.degree);
    if (opt.json) {
        ordered_json doc;
        doc["kind"] = opt.kind;
        doc["degree"] = opt.degree;
        ordered_json coeffs = ordered_json::object();
        for (const auto& [partition, value] : table.coefficients)
            coeffs[partition.json_key()] = value.str();
        doc["coefficients"] = coeffs;
        out << doc.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<Rational, std::string>> terms;
    for (const auto& [partition, value] : table.coefficients)
        terms.emplace_back(value, partition.monomial());
    out << opt.kind << "_" << opt.degree << " = " << term_joined(terms) << "\n";
}

void cmd_genus_of_manifold(const Options& opt, SeriesKind kind, std::ostream& out) {
    const ManifoldData m = parse_manifold_file(opt.manifold_path);
    const Rational value = genus_of_manifold(kind, m);
    const std::string label = kind == SeriesKind::L ? "signature" : "ahat";
    if (opt.json) {
        ordered_json doc;
        doc["manifold"] = m.name();
        doc[label] = value.str();
        out << doc.dump(2) << "\n";
        return;
    }
    if (kind == SeriesKind::L)
        out << "signature(" << m.name() << ") = " << value.str() << "\n";
    else
        out << "Ahat(" << m.name() << ") = " << value.str() << "\n";
}

void cmd_construct(const Options& opt, std::ostream& out) {
    ConstructionInput input{parse_manifold_file(opt.manifold_path), opt.k, opt.lambda};
    std::optional<Rational> a_override;
    if (opt.a_literal)
        a_override = Rational::parse(*opt.a_literal);
    const ConstructionCertificate cert =
        build_certificate(std::move(input), a_override, opt.connectivity);
    out << (opt.json ? certificate_json_string(cert) : certificate_pretty_string(cert));
}

void cmd_gate(const Options& opt, std::ostream& out) {
    const ManifoldData m = parse_manifold_file(opt.manifold_path);
    const GateReport gate = applicability_gate(m, opt.k, opt.connectivity);
    const CrossSectionReport cs = cross_section_check(m, opt.k);
    const PscReport psc = psc_obstruction_check(m);
    out << (opt.json ? gate_json_string(m, gate, cs, psc) : gate_pretty_string(m, gate, cs, psc));
}

void cmd_bounds(const Options& opt, std::ostream& out) {
    const int bl = bl_bound(opt.d);
    std::optional<int> morlet;
    if (opt.connectivity)
        morlet = morlet_bound(opt.d, *opt.connectivity);
    if (opt.json) {
        ordered_json doc;
        doc["d"] = opt.d;
        doc["bl_max_k"] = bl;
        if (morlet) {
            doc["connectivity"] = *opt.connectivity;
            doc["morlet_max_k"] = *morlet;
        }
        out << doc.dump(2) << "\n";
        return;
    }
    out << "d = " << opt.d << "\n";
    out << "bl bound: max k = " << bl << "\n";
    if (morlet)
        out << "morlet bound (connectivity " << *opt.connectivity << "): max k = " << *morlet
            << "\n";
}

void cmd_tables(const Options& opt, std::ostream& out) {
    const auto [from, to] = parse_range(opt.range);
    const bool is_l = opt.which == "l-group";
    if (!is_l && opt.which != "ko-group")
        throw ValidationError("unknown table \"" + opt.which + "\" (expected l-group or ko-group)");
    std::vector<std::pair<long long, AbelianGroup>> rows;
    for (long long n = from; n <= to; ++n)
        rows.emplace_back(n, is_l ? l_group(n) : ko_group(n));
    if (opt.json) {
        ordered_json doc;
        doc["which"] = opt.which;
        doc["from"] = from;
        doc["to"] = to;
        ordered_json groups = ordered_json::object();
        for (const auto& [n, g] : rows)
            groups[std::to_string(n)] = to_string(g);
        doc["groups"] = groups;
        out << doc.dump(2) << "\n";
        return;
    }
    for (const auto& [n, g] : rows)
        out << (is_l ? "L_" : "KO^-") << n << " = " << to_string(g) << "\n";
}

void cmd_sphere_product(const Options& opt, std::ostream& out) {
    const ManifoldData m = parse_manifold_file(opt.manifold_path);
    const ManifoldData product = product_with_sphere(m, opt.n);
    std::ofstream file(opt.out_path);
    if (!file)
        throw IoError("cannot write \"" + opt.out_path + "\"");
    file << descriptor_string(product);
    if (!file.flush())
        throw IoError("failed writing \"" + opt.out_path + "\"");
    if (opt.json) {
        ordered_json doc;
        doc["name"] = product.name();
        doc["dimension"] = product.dimension();
        doc["written"] = opt.out_path;
        out << doc.dump(2) << "\n";
        return;
    }
    out << "wrote " << product.name() << " (dimension " << product.dimension() << ") to "
        << opt.out_path << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"genus-forge: exact characteristic-class and surgery-obstruction calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON instead of the pretty report");
    bool pretty = false;
    app.add_flag("--pretty", pretty, "emit the pretty report (default)");

    auto* series = app.add_subcommand("series", "characteristic power series coefficients");
    series->add_option("--kind", opt.kind, "L or Ahat")->required();
    series->add_option("--order", opt.order, "truncation order")->required()
        ->check(CLI::NonNegativeNumber);

    auto* genus = app.add_subcommand("genus", "multiplicative-sequence polynomial K_n");
    genus->add_option("--kind", opt.kind, "L or Ahat")->required();
    genus->add_option("--degree", opt.degree, "degree n >= 1")->required()
        ->check(CLI::PositiveNumber);

    auto* signature = app.add_subcommand("signature", "L-genus of a manifold descriptor");
    signature->add_option("--manifold", opt.manifold_path, "descriptor file")->required();

    auto* ahat = app.add_subcommand("ahat", "Ahat-genus of a manifold descriptor");
    ahat->add_option("--manifold", opt.manifold_path, "descriptor file")->required();

    auto* construct =
        app.add_subcommand("construct", "normal invariant over S^k x M with vanishing obstruction");
    construct->add_option("--manifold", opt.manifold_path, "descriptor file")->required();
    construct->add_option("--k", opt.k, "sphere dimension k >= 1")->required();
    construct->add_option("--lambda", opt.lambda, "nonzero integer multiplier (default 1)");
    std::string a_literal;
    auto* a_opt = construct->add_option("--A", a_literal, "override the solved top coefficient");
    int connectivity = 0;
    auto* conn_construct =
        construct->add_option("--conn", connectivity, "connectivity for the morlet bound path");

    auto* gate = app.add_subcommand("gate", "applicability gates for a manifold and k");
    gate->add_option("--manifold", opt.manifold_path, "descriptor file")->required();
    gate->add_option("--k", opt.k, "sphere dimension k")->required();
    auto* conn_gate = gate->add_option("--conn", connectivity, "connectivity for the morlet path");

    auto* bounds = app.add_subcommand("bounds", "admissible k under the dimension bounds");
    bounds->add_option("--d", opt.d, "manifold dimension")->required();
    auto* conn_bounds =
        bounds->add_option("--conn", connectivity, "connectivity for the morlet bound");

    auto* tables = app.add_subcommand("tables", "L-group / KO-group tables");
    tables->add_option("--which", opt.which, "l-group or ko-group")->required();
    tables->add_option("--range", opt.range, "inclusive range A..B")->required();

    auto* sphere =
        app.add_subcommand("sphere-product", "write the descriptor of M x S^n to a file");
    sphere->add_option("--manifold", opt.manifold_path, "descriptor file")->required();
    sphere->add_option("--n", opt.n, "sphere dimension n >= 1")->required()
        ->check(CLI::PositiveNumber);
    sphere->add_option("--out", opt.out_path, "output descriptor path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (a_opt->count() > 0)
            opt.a_literal = a_literal;
        if (conn_construct->count() > 0 || conn_gate->count() > 0 || conn_bounds->count() > 0)
            opt.connectivity = connectivity;

        if (series->parsed())
            cmd_series(opt, out);
        else if (genus->parsed())
            cmd_genus(opt, out);
        else if (signature->parsed())
            cmd_genus_of_manifold(opt, SeriesKind::L, out);
        else if (ahat->parsed())
            cmd_genus_of_manifold(opt, SeriesKind::Ahat, out);
        else if (construct->parsed())
            cmd_construct(opt, out);
        else if (gate->parsed())
            cmd_gate(opt, out);
        else if (bounds->parsed())
            cmd_bounds(opt, out);
        else if (tables->parsed())
            cmd_tables(opt, out);
        else if (sphere->parsed())
            cmd_sphere_product(opt, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace genusforge::cli
