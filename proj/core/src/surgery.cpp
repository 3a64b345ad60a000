#include "genusforge/surgery.hpp"

#include <algorithm>

namespace genusforge {

namespace {

long long floor_mod(long long n, long long d) {
    return ((n % d) + d) % d;
}

long long floor_div(long long n, long long d) {
    const long long q = n / d;
    return (n % d != 0 && (n < 0) != (d < 0)) ? q - 1 : q;
}

Rational sign_pow(int exponent) {
    return Rational(exponent % 2 == 0 ? 1 : -1);
}

} // namespace

std::string to_string(AbelianGroup g) {
    switch (g) {
    case AbelianGroup::Z: return "Z";
    case AbelianGroup::Z2: return "Z/2";
    case AbelianGroup::Zero: return "0";
    }
    return "?";
}

AbelianGroup l_group(long long n) {
    switch (floor_mod(n, 4)) {
    case 0: return AbelianGroup::Z;
    case 2: return AbelianGroup::Z2;
    default: return AbelianGroup::Zero;
    }
}

AbelianGroup ko_group(long long k) {
    if (k < 0)
        throw PreconditionError("ko_group is defined for k >= 0");
    if (k % 4 == 0)
        return AbelianGroup::Z;
    const long long r = k % 8;
    return (r == 1 || r == 2) ? AbelianGroup::Z2 : AbelianGroup::Zero;
}

std::optional<int> minimal_pontryagin_index(const ManifoldData& m) {
    for (const auto& [i, cls] : m.pontryagin())
        if (!cls.is_zero())
            return i;
    return std::nullopt;
}

CohomologyClass NormalInvariantBlueprint::xi_total_class(const Rational& a) const {
    CohomologyClass total = ring.unit();
    total += p_mj_xi;
    total += (p_m_xi_coeff * a) * ring.fundamental();
    return total;
}

NormalInvariantBlueprint build_blueprint(const ConstructionInput& input) {
    const ManifoldData& m = input.manifold;
    const int d = m.dimension();
    const int k = input.k;

    if (k < 1)
        throw ValidationError("k must be >= 1");
    if (input.lambda == 0)
        throw ValidationError("lambda must be nonzero");
    if ((d + k) % 4 != 0)
        throw PreconditionError("d+k = " + std::to_string(d + k) + " not divisible by 4");

    const auto j = minimal_pontryagin_index(m);
    if (!j)
        throw PreconditionError("no nonvanishing Pontryagin class");

    NormalInvariantBlueprint bp;
    bp.manifold = m;
    bp.k = k;
    bp.m = (d + k) / 4;
    bp.j = *j;
    bp.lambda = input.lambda;
    if (bp.j >= bp.m)
        throw PreconditionError("degenerate range: j = " + std::to_string(bp.j) +
                                " is not smaller than m = " + std::to_string(bp.m));

    bp.ring = RingModel::sphere_extension(m, k);
    bp.dual_class = find_dual_class(m, m.pontryagin_class(bp.j));

    const Rational lambda{BigInt(input.lambda)};
    bp.b = sign_pow(bp.m - bp.j + 1) * Rational(factorial(2 * (bp.m - bp.j))) * lambda;
    bp.c = sign_pow(bp.m + 1) * Rational(factorial(2 * bp.m)) * lambda;

    const CohomologyClass u_k = CohomologyClass::single(bp.ring.sphere_class_id());
    bp.p_mj_xi = (-bp.b) * bp.ring.multiply(u_k, bp.dual_class);
    bp.p_m_xi_coeff = -bp.c;
    return bp;
}

Rational surgery_obstruction(const NormalInvariantBlueprint& bp, const Rational& a) {
    const GenusTable& table = genus_polynomial(SeriesKind::L, bp.m);
    const Rational& s_mixed = table.coefficient_pair(bp.j, bp.m - bp.j);
    const Rational& s_top = table.coefficient_top();
    const Rational mu{bp.pair_multiplicity()};
    return (mu * s_mixed + s_top) * bp.b + s_top * bp.c * a;
}

SolvedTopCoefficient solve_for_a(const Rational& s_mixed, int pair_multiplicity,
                                 const Rational& s_top, const Rational& b, const Rational& c) {
    if (s_top.is_zero())
        throw Error("internal invariant violation: s_m = 0 contradicts the nonzero-coefficient "
                    "certificate for the L-sequence");
    if (c.is_zero())
        throw Error("internal invariant violation: c = 0 in a blueprint");
    const Rational combined = Rational(pair_multiplicity) * s_mixed + s_top;
    SolvedTopCoefficient out;
    out.value = -(combined * b) / (s_top * c);
    out.coefficient_vanishes = combined.is_zero();
    return out;
}

SolvedTopCoefficient solve_for_a(const NormalInvariantBlueprint& bp) {
    const GenusTable& table = genus_polynomial(SeriesKind::L, bp.m);
    return solve_for_a(table.coefficient_pair(bp.j, bp.m - bp.j), bp.pair_multiplicity(),
                       table.coefficient_top(), bp.b, bp.c);
}

PartitionMap<Rational> pontryagin_numbers(const NormalInvariantBlueprint& bp, const Rational& a) {
    const RingModel& ring = bp.ring;
    const CohomologyClass total =
        ring.multiply(ring.total_pontryagin_class(), ring.inverse_total_class(bp.xi_total_class(a)));

    std::vector<CohomologyClass> components(static_cast<size_t>(bp.m) + 1);
    components[0] = ring.unit();
    for (int i = 1; i <= bp.m; ++i)
        components[static_cast<size_t>(i)] = ring.component(total, 4 * i);

    PartitionMap<Rational> census;
    for (const Partition& partition : partitions_of(bp.m)) {
        CohomologyClass monomial = ring.unit();
        for (int part : partition.parts()) {
            monomial = ring.multiply(monomial, components[static_cast<size_t>(part)]);
            if (monomial.is_zero())
                break;
        }
        census.emplace(partition, ring.evaluate(monomial));
    }
    return census;
}

Rational ahat_total_space(const NormalInvariantBlueprint& bp, const Rational& a) {
    const GenusTable& table = genus_polynomial(SeriesKind::Ahat, bp.m);
    Rational acc;
    for (const auto& [partition, number] : pontryagin_numbers(bp, a))
        acc += table.coefficient(partition) * number;
    return acc;
}

CrossSectionReport cross_section_check(const ManifoldData& m, int k) {
    if (k < 1)
        throw ValidationError("k must be >= 1");
    using Verdict = CrossSectionReport::Verdict;

    if (ko_group(k) == AbelianGroup::Zero)
        return {Verdict::Satisfied, "KO-group of the sphere vanishes"};
    if (k % 4 == 0) {
        const auto j = minimal_pontryagin_index(m);
        if (!j)
            return {Verdict::NotSatisfied,
                    "no nonvanishing Pontryagin class, construction inapplicable"};
        if (4 * *j < m.dimension())
            return {Verdict::Satisfied, "j < d/4, so p_{k/4}(nu_s) = 0 and nu_s is trivial"};
        return {Verdict::NotSatisfied, "j = d/4"};
    }
    // k = 1,2 mod 8
    return {Verdict::RationalOnly, "rationally trivial, 2-torsion possible"};
}

PscReport psc_obstruction_check(const ManifoldData& m) {
    PscReport out;
    if (m.dimension() % 4 != 0) {
        out.reason = "inapplicable: dimension not divisible by 4";
        return out;
    }
    if (!m.spin()) {
        out.reason = "inapplicable: not spin";
        return out;
    }
    const auto j = minimal_pontryagin_index(m);
    if (!j) {
        out.reason = "inapplicable: all rational Pontryagin classes vanish";
        return out;
    }
    if (4 * *j != m.dimension()) {
        out.reason = "inapplicable: j < d/4";
        return out;
    }
    out.applicable = true;
    out.ahat = genus_of_manifold(SeriesKind::Ahat, m);
    out.no_psc_metric = !out.ahat->is_zero();
    out.reason = out.no_psc_metric ? "Ahat(M) != 0: no positive scalar curvature metric"
                                   : "Ahat(M) = 0: no obstruction from this route";
    return out;
}

int bl_bound(int d) {
    if (d < 1)
        throw ValidationError("dimension must be >= 1");
    return static_cast<int>(std::min(floor_div(d - 1, 3), floor_div(d - 5, 2)));
}

int morlet_bound(int d, int conn) {
    if (d < 1)
        throw ValidationError("dimension must be >= 1");
    if (d % 2 != 0)
        throw PreconditionError("morlet bound needs an even dimension");
    if (conn < 0)
        throw ValidationError("connectivity must be >= 0");
    if (conn > d - 4)
        throw PreconditionError("connectivity must be <= d-4");
    return std::min(d - 4, 2 * conn - 1);
}

GateReport applicability_gate(const ManifoldData& m, int k, std::optional<int> connectivity) {
    GateReport r;
    r.d = m.dimension();
    r.k = k;
    r.simply_connected = m.simply_connected();
    r.spin = m.spin();
    r.has_nonzero_pontryagin = minimal_pontryagin_index(m).has_value();
    r.k_positive = k >= 1;
    r.parity = (r.d + k) % 4 == 0;

    r.bl.available = true;
    r.bl.max_k = bl_bound(r.d);
    r.bl.pass = r.k_positive && k <= r.bl.max_k;

    if (!connectivity) {
        r.morlet.reason = "connectivity not supplied";
    } else if (r.d % 2 != 0) {
        r.morlet.reason = "dimension is odd";
    } else if (*connectivity < 0) {
        r.morlet.reason = "connectivity must be >= 0";
    } else if (*connectivity > r.d - 4) {
        r.morlet.reason = "connectivity exceeds d-4";
    } else {
        r.morlet.available = true;
        r.morlet.max_k = morlet_bound(r.d, *connectivity);
        r.morlet.pass = r.k_positive && k <= r.morlet.max_k;
    }

    if (r.bl.pass)
        r.via = "bl";
    else if (r.morlet.pass)
        r.via = "morlet";

    r.overall = r.simply_connected && r.spin && r.has_nonzero_pontryagin && r.k_positive &&
                r.parity && (r.bl.pass || r.morlet.pass);
    return r;
}

bool is_ahat_multiplicative_fibre(const ManifoldData& m, int k) {
    if (k < 1)
        throw ValidationError("k must be >= 1");
    const int required = std::max(3 * k + 1, 2 * k + 5);
    if (m.dimension() < required)
        throw PreconditionError("dimension bound violated: need d >= " + std::to_string(required) +
                                ", got " + std::to_string(m.dimension()));
    return !minimal_pontryagin_index(m).has_value();
}

bool mcg_finiteness_condition(const ManifoldData& m) {
    return m.dimension() % 4 != 3 || !minimal_pontryagin_index(m).has_value();
}

ConstructionCertificate build_certificate(const ConstructionInput& input,
                                          std::optional<Rational> a_override,
                                          std::optional<int> connectivity) {
    const NormalInvariantBlueprint bp = build_blueprint(input);
    const SolvedTopCoefficient solved = solve_for_a(bp);

    ConstructionCertificate cert;
    cert.manifold_name = input.manifold.name();
    cert.k = input.k;
    cert.lambda = input.lambda;
    cert.m = bp.m;
    cert.j = bp.j;
    cert.b = bp.b;
    cert.c = bp.c;
    cert.a_solved = !a_override.has_value();
    cert.a = a_override ? *a_override : solved.value;
    cert.sigma = surgery_obstruction(bp, cert.a);
    cert.census = pontryagin_numbers(bp, cert.a);
    cert.ahat_e = ahat_total_space(bp, cert.a);
    cert.gate = applicability_gate(input.manifold, input.k, connectivity);
    cert.cross_section = cross_section_check(input.manifold, input.k);
    cert.psc = psc_obstruction_check(input.manifold);

    if (solved.coefficient_vanishes)
        cert.warnings.push_back("mu*s_{j,m-j} + s_m = 0: the obstruction vanishes for every A "
                                "and no nonzero A is available on this route");
    if (cert.a_solved && cert.a.is_zero() && !solved.coefficient_vanishes)
        cert.warnings.push_back("solved A is zero");
    if (!cert.a_solved && !cert.sigma.is_zero())
        cert.warnings.push_back("overridden A leaves a nonvanishing surgery obstruction");
    return cert;
}

} // namespace genusforge
