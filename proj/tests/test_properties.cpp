#include "genusforge/surgery.hpp"

#include "support/random_manifold.hpp"

#include <doctest.h>

using namespace genusforge;
using genusforge::testing::RandomManifoldStream;

namespace {

Rational rat(long long p, long long q = 1) {
    return Rational(BigInt(p), BigInt(q));
}

CohomologyClass random_unit_class(const RingModel& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
    CohomologyClass out = ring.unit();
    for (const auto& e : ring.data().basis()) {
        if (e.degree == 0)
            continue;
        out.add(e.id, Rational(BigInt(num(rng)), BigInt(den(rng))));
    }
    return out;
}

} // namespace

TEST_CASE("pipeline properties hold on randomized descriptors") {
    RandomManifoldStream stream(0xC0FFEE);
    int lambda_rotation = 0;

    for (int trial = 0; trial < 120; ++trial) {
        const ManifoldData m = stream.next();
        CAPTURE(trial);
        CAPTURE(m.name());
        CAPTURE(m.dimension());

        const RingModel ring = RingModel::base(m);

        // inverse_total_class round-trips on random unit-constant classes
        const CohomologyClass p = random_unit_class(ring, stream.rng());
        CHECK(ring.multiply(p, ring.inverse_total_class(p)) == ring.unit());

        // dual class against the minimal Pontryagin class
        const auto j = minimal_pontryagin_index(m);
        REQUIRE(j.has_value());
        const CohomologyClass x = find_dual_class(m, m.pontryagin_class(*j));
        CHECK(ring.multiply(x, m.pontryagin_class(*j)) == ring.fundamental());
        CHECK(ring.evaluate(ring.multiply(x, m.pontryagin_class(*j))) == rat(1));

        // genus of M x S^n vanishes (both when d+n = 0 mod 4 and otherwise)
        const int filler = (4 - (m.dimension() + 1) % 4) % 4;
        const int n_aligned = filler == 0 ? 4 : 1 + filler;
        CHECK(genus_of_manifold(SeriesKind::L, product_with_sphere(m, n_aligned)) == rat(0));
        CHECK(genus_of_manifold(SeriesKind::Ahat, product_with_sphere(m, n_aligned)) == rat(0));
        CHECK(genus_of_manifold(SeriesKind::L, product_with_sphere(m, 3)) == rat(0));

        // construction pipeline
        const int k = stream.pick_k(m);
        const long long lambdas[] = {1, 2, 5, -3};
        const long long lambda = lambdas[lambda_rotation++ % 4];
        const NormalInvariantBlueprint bp = build_blueprint(ConstructionInput{m, k, lambda});
        CHECK(bp.j == *j);
        CHECK(bp.m == (m.dimension() + k) / 4);

        const SolvedTopCoefficient solved = solve_for_a(bp);
        CHECK(surgery_obstruction(bp, solved.value).is_zero());
        CHECK(solve_for_a(build_blueprint(ConstructionInput{m, k, 7})).value == solved.value);

        // census contract: mu*b at {j, m-j}, b + cA at {m}, 0 elsewhere
        const PartitionMap<Rational> census = pontryagin_numbers(bp, solved.value);
        const Partition mixed(bp.j == bp.m - bp.j
                                  ? std::vector<int>{bp.j, bp.j}
                                  : std::vector<int>{std::max(bp.j, bp.m - bp.j),
                                                     std::min(bp.j, bp.m - bp.j)});
        const Partition top(std::vector<int>{bp.m});
        for (const auto& [partition, number] : census) {
            if (partition == mixed)
                CHECK(number == rat(bp.pair_multiplicity()) * bp.b);
            else if (partition == top)
                CHECK(number == bp.b + bp.c * solved.value);
            else
                CHECK(number.is_zero());
        }

        // the L-genus of the total space vanishes (sigma = 0 restated)
        const GenusTable& table = genus_polynomial(SeriesKind::L, bp.m);
        Rational signature;
        for (const auto& [partition, number] : census)
            signature += table.coefficient(partition) * number;
        CHECK(signature.is_zero());

        // gate monotonicity: a passing gate needs L_{d+k} = Z
        const GateReport gate = applicability_gate(m, k, 1);
        if (gate.overall)
            CHECK(l_group(m.dimension() + k) == AbelianGroup::Z);
        CHECK_FALSE(applicability_gate(m, k + 1, 1).overall);
    }
}
