#pragma once

#include "genusforge/genus.hpp"

#include <optional>
#include <string>

namespace genusforge {

enum class AbelianGroup { Z, Z2, Zero };

std::string to_string(AbelianGroup g);

/// Simply connected surgery obstruction group L_n(Z), 4-periodic:
/// Z for n = 0 (4), Z/2 for n = 2 (4), 0 otherwise. Defined for all n.
AbelianGroup l_group(long long n);

/// pi_k(BO) = KO^{-k}(pt) for k >= 0: Z for k = 0 (4), Z/2 for k = 1,2 (8),
/// 0 otherwise.
AbelianGroup ko_group(long long k);

/// Least i >= 1 with p_i(TM) != 0; nullopt when all rational Pontryagin
/// classes vanish.
std::optional<int> minimal_pontryagin_index(const ManifoldData& m);

struct ConstructionInput {
    ManifoldData manifold;
    int k = 0;
    long long lambda = 1;
};

/// The data of a normal invariant over S^k x M whose stable bundle has
/// exactly two higher nonvanishing rational Pontryagin classes:
///   p_{m-j}(xi') = -b * u_k * x      with b = (-1)^{m-j+1} (2m-2j)! lambda
///   p_m(xi')     = -c * A * u_k * u_M with c = (-1)^{m+1} (2m)! lambda
/// where x is dual to p_j(TM) and A is still free.
struct NormalInvariantBlueprint {
    ManifoldData manifold;
    RingModel ring; // sphere extension H*(S^k x M)
    int k = 0;
    int m = 0;
    int j = 0;
    long long lambda = 1;
    CohomologyClass dual_class;  // x, in the base ring
    CohomologyClass p_mj_xi;     // -b * u_k * x, in the extension ring
    Rational p_m_xi_coeff;       // -c, the scalar multiplying A * u_k * u_M
    Rational b;
    Rational c;

    /// 2 when j = m-j (the product p_j * p_{m-j} is a square and its
    /// census value doubles), else 1.
    int pair_multiplicity() const { return j == m - j ? 2 : 1; }

    /// Total Pontryagin class of xi' at a given top coefficient A.
    CohomologyClass xi_total_class(const Rational& a) const;
};

/// Assembles the blueprint: checks (d+k) = 0 mod 4, finds j and m, solves
/// for the dual class, and fills in the prescribed classes.
NormalInvariantBlueprint build_blueprint(const ConstructionInput& input);

/// Surgery obstruction of the blueprint at top coefficient A, normalized
/// as a signature (the 1/8 factor is dropped; only vanishing matters):
///   (mu * s_{j,m-j} + s_m) * b + s_m * c * A
/// with s-coefficients from the degree-m L-polynomial and mu the pair
/// multiplicity.
Rational surgery_obstruction(const NormalInvariantBlueprint& bp, const Rational& a);

struct SolvedTopCoefficient {
    Rational value;
    /// True when mu*s_{j,m-j} + s_m = 0: any A kills the obstruction, the
    /// formula returns A = 0, and a nonzero choice does not exist on this
    /// route. Surfaced as a warning, never an error.
    bool coefficient_vanishes = false;
};

/// The unique A with surgery_obstruction(bp, A) = 0. Independent of lambda.
SolvedTopCoefficient solve_for_a(const NormalInvariantBlueprint& bp);

/// The underlying formula A = -(s_mixed * mu + s_top) * b / (s_top * c),
/// exposed so the degenerate path stays testable.
SolvedTopCoefficient solve_for_a(const Rational& s_mixed, int pair_multiplicity,
                                 const Rational& s_top, const Rational& b, const Rational& c);

/// Elementary Pontryagin numbers <p_I(TM + (-xi')), [S^k x M]> for every
/// partition I of m, computed ring-level from
/// total_pontryagin_class * inverse_total_class(p(xi')). The closed forms
/// say: mu*b at {j, m-j}, b + c*A at {m}, 0 elsewhere.
PartitionMap<Rational> pontryagin_numbers(const NormalInvariantBlueprint& bp, const Rational& a);

/// Ahat-genus of the total space: sum of ahat-coefficients against the
/// Pontryagin-number census.
Rational ahat_total_space(const NormalInvariantBlueprint& bp, const Rational& a);

struct CrossSectionReport {
    enum class Verdict { Satisfied, NotSatisfied, RationalOnly };
    Verdict verdict = Verdict::NotSatisfied;
    std::string reason;
};

/// Whether the constructed bundle admits a cross-section with trivial
/// normal bundle: yes when the KO-group of the sphere vanishes, yes when
/// k = 0 (4) and j < d/4, and "rationally trivial, 2-torsion possible"
/// when k = 1,2 (8).
CrossSectionReport cross_section_check(const ManifoldData& m, int k);

struct PscReport {
    bool applicable = false;
    std::optional<Rational> ahat;
    bool no_psc_metric = false;
    std::string reason;
};

/// The j = d/4 scalar-curvature obstruction: for a spin 4n-manifold whose
/// only nonvanishing Pontryagin class sits in top degree, a nonzero
/// Ahat-genus rules out positive scalar curvature.
PscReport psc_obstruction_check(const ManifoldData& m);

/// Largest k with k <= min((d-1)/3, (d-5)/2); may be < 1, meaning no
/// admissible k.
int bl_bound(int d);

/// Largest k with k <= min(d-4, 2*conn - 1) for even d and a
/// conn-connected manifold, conn <= d-4.
int morlet_bound(int d, int conn);

struct BoundPath {
    bool available = false;
    int max_k = 0;
    bool pass = false;
    std::string reason; // why unavailable
};

struct GateReport {
    int d = 0;
    int k = 0;
    bool simply_connected = false;
    bool spin = false;
    bool has_nonzero_pontryagin = false;
    bool k_positive = false;
    bool parity = false; // (d+k) = 0 mod 4
    BoundPath bl;
    BoundPath morlet;
    std::string via; // "bl", "morlet", or "" when no bound path passes
    bool overall = false;
};

/// Checks every numeric hypothesis of the main applicability gate:
/// simply connected, spin, some nonvanishing Pontryagin class, k >= 1,
/// parity, and one of the two dimension bounds (the Morlet path needs the
/// caller-supplied connectivity).
GateReport applicability_gate(const ManifoldData& m, int k, std::optional<int> connectivity);

/// True iff all rational Pontryagin classes vanish; requires
/// d >= max(3k+1, 2k+5).
bool is_ahat_multiplicative_fibre(const ManifoldData& m, int k);

/// True iff d != 3 mod 4, or all rational Pontryagin classes vanish.
bool mcg_finiteness_condition(const ManifoldData& m);

struct ConstructionCertificate {
    std::string manifold_name;
    int k = 0;
    long long lambda = 1;
    int m = 0;
    int j = 0;
    Rational b;
    Rational c;
    Rational a;
    bool a_solved = true; // false when the caller overrode A
    Rational sigma;
    PartitionMap<Rational> census;
    Rational ahat_e;
    GateReport gate;
    CrossSectionReport cross_section;
    PscReport psc;
    std::vector<std::string> warnings;
};

/// Runs the full pipeline: blueprint, solve for A (or use the override),
/// obstruction, Pontryagin-number census, Ahat of the total space, and all
/// applicability gates.
ConstructionCertificate build_certificate(const ConstructionInput& input,
                                          std::optional<Rational> a_override = std::nullopt,
                                          std::optional<int> connectivity = std::nullopt);

/// Deterministic serializations: identical certificates give identical
/// bytes.
std::string certificate_json_string(const ConstructionCertificate& cert);
std::string certificate_pretty_string(const ConstructionCertificate& cert);
std::string gate_json_string(const ManifoldData& m, const GateReport& gate,
                             const CrossSectionReport& cs, const PscReport& psc);
std::string gate_pretty_string(const ManifoldData& m, const GateReport& gate,
                               const CrossSectionReport& cs, const PscReport& psc);

} // namespace genusforge
