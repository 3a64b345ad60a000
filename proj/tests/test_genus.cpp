#include "genusforge/genus.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>

#include <map>
#include <thread>

using namespace genusforge;
using genusforge::testing::load_fixture;

namespace {

Rational rat(long long p, long long q = 1) {
    return Rational(BigInt(p), BigInt(q));
}

Partition part(std::vector<int> parts) {
    return Partition(std::move(parts));
}

// Independent partition count: p(n) by the classical two-variable
// recurrence count(n, max) = count(n-max, max) + count(n, max-1).
long long partition_count(int n, int max_part) {
    if (n == 0)
        return 1;
    if (n < 0 || max_part == 0)
        return 0;
    return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
}

// Test-local symmetric-polynomial expansion, independent of the library's
// rewrite machinery. Monomials are exponent vectors over num_vars roots.
using MiniPoly = std::map<std::vector<int>, Rational>;

MiniPoly mini_mul(const MiniPoly& a, const MiniPoly& b, int max_degree) {
    MiniPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> key(ma.size());
            int degree = 0;
            for (size_t i = 0; i < key.size(); ++i) {
                key[i] = ma[i] + mb[i];
                degree += key[i];
            }
            if (degree > max_degree)
                continue;
            out[key] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

MiniPoly mini_elementary(int num_vars, int j) {
    MiniPoly out;
    std::vector<int> mono(static_cast<size_t>(num_vars), 0);
    const auto recurse = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            out[mono] = rat(1);
            return;
        }
        for (int v = next; v <= num_vars - remaining; ++v) {
            mono[static_cast<size_t>(v)] = 1;
            self(self, v + 1, remaining - 1);
            mono[static_cast<size_t>(v)] = 0;
        }
    };
    recurse(recurse, 0, j);
    return out;
}

MiniPoly mini_one(int num_vars) {
    return {{std::vector<int>(static_cast<size_t>(num_vars), 0), rat(1)}};
}

MiniPoly degree_part(const MiniPoly& p, int degree) {
    MiniPoly out;
    for (const auto& [mono, c] : p) {
        int total = 0;
        for (int e : mono)
            total += e;
        if (total == degree)
            out[mono] = c;
    }
    return out;
}

} // namespace

TEST_CASE("partition construction and accessors") {
    CHECK(part({3, 1}).weight() == 4);
    CHECK(part({}).weight() == 0);
    CHECK(part({2, 1, 1}).json_key() == "[1,1,2]");
    CHECK(part({2, 1, 1}).monomial() == "p1^2·p2");
    CHECK(part({3}).monomial() == "p3");
    CHECK(part({}).monomial() == "1");
    CHECK_THROWS_AS(part({1, 2}), PreconditionError);
    CHECK_THROWS_AS(part({0}), PreconditionError);
}

TEST_CASE("partition enumeration in canonical order") {
    const auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    const auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == part({3}));
    CHECK(p3[1] == part({2, 1}));
    CHECK(p3[2] == part({1, 1, 1}));

    CHECK(partitions_of(4).size() == 5);

    for (int n = 0; n <= 20; ++n) {
        const auto all = partitions_of(n);
        CHECK(static_cast<long long>(all.size()) == partition_count(n, n == 0 ? 1 : n));
        // exactly once, in canonical order
        for (size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(all[i].parts() > all[i + 1].parts());
        for (const auto& p : all)
            CHECK(p.weight() == n);
    }
}

TEST_CASE("genus polynomial frozen tables") {
    const GenusTable& l1 = genus_polynomial(SeriesKind::L, 1);
    CHECK(l1.coefficient(part({1})) == rat(1, 3));

    const GenusTable& l2 = genus_polynomial(SeriesKind::L, 2);
    CHECK(l2.coefficient(part({2})) == rat(7, 45));
    CHECK(l2.coefficient(part({1, 1})) == rat(-1, 45));

    const GenusTable& l3 = genus_polynomial(SeriesKind::L, 3);
    CHECK(l3.coefficient(part({3})) == rat(62, 945));
    CHECK(l3.coefficient(part({2, 1})) == rat(-13, 945));
    CHECK(l3.coefficient(part({1, 1, 1})) == rat(2, 945));

    const GenusTable& a1 = genus_polynomial(SeriesKind::Ahat, 1);
    CHECK(a1.coefficient(part({1})) == rat(-1, 24));

    const GenusTable& a2 = genus_polynomial(SeriesKind::Ahat, 2);
    CHECK(a2.coefficient(part({2})) == rat(-1, 1440));
    CHECK(a2.coefficient(part({1, 1})) == rat(7, 5760));

    CHECK(l2.coefficient_pair(1, 1) == rat(-1, 45));
    CHECK(l3.coefficient_pair(1, 2) == rat(-13, 945));
    CHECK(l3.coefficient_top() == rat(62, 945));
    CHECK_THROWS_AS(l3.coefficient(part({2, 2})), PreconditionError);
}

TEST_CASE("formal-root expansion is stable under an extra root") {
    for (const SeriesKind kind : {SeriesKind::L, SeriesKind::Ahat}) {
        for (int n = 1; n <= 5; ++n) {
            const GenusTable narrow = genus_polynomial_with_roots(kind, n, n);
            const GenusTable wide = genus_polynomial_with_roots(kind, n, n + 1);
            CHECK(narrow.coefficients == wide.coefficients);
        }
    }
}

TEST_CASE("genus polynomial reproduces the root expansion when evaluated at "
          "elementary symmetric polynomials") {
    for (int n = 1; n <= 4; ++n) {
        const int num_vars = n + 1;
        const PowerSeries q = characteristic_series(SeriesKind::L, n);

        MiniPoly product = mini_one(num_vars);
        for (int var = 0; var < num_vars; ++var) {
            MiniPoly factor;
            for (int t = 0; t <= n; ++t) {
                std::vector<int> mono(static_cast<size_t>(num_vars), 0);
                mono[static_cast<size_t>(var)] = t;
                if (!q.coeff(t).is_zero())
                    factor[mono] = q.coeff(t);
            }
            product = mini_mul(product, factor, n);
        }

        MiniPoly evaluated;
        for (const auto& [partition, coeff] : genus_polynomial(SeriesKind::L, n).coefficients) {
            MiniPoly monomial = mini_one(num_vars);
            for (int p : partition.parts())
                monomial = mini_mul(monomial, mini_elementary(num_vars, p), n);
            for (const auto& [mono, c] : monomial)
                evaluated[mono] += coeff * c;
        }
        for (auto it = evaluated.begin(); it != evaluated.end();)
            it = it->second.is_zero() ? evaluated.erase(it) : std::next(it);

        CHECK(evaluated == degree_part(product, n));
    }
}

TEST_CASE("leading L coefficient matches the Bernoulli closed form") {
    // s_n * (2n)!/2^{2n} = (-1)^{n+1} (2^{2n-1} - 1) B_{2n}
    for (int n = 1; n <= 6; ++n) {
        const Rational lhs = genus_polynomial(SeriesKind::L, n).coefficient_top() *
                             Rational(factorial(2 * n)) / Rational(pow2(2 * n));
        const Rational rhs =
            rat(n % 2 == 0 ? -1 : 1) * (Rational(pow2(2 * n - 1)) - rat(1)) * bernoulli(2 * n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nonzero coefficient certificate") {
    CHECK(certify_nonzero_coefficients(SeriesKind::L, 1).all_nonzero);
    CHECK(certify_nonzero_coefficients(SeriesKind::L, 4).all_nonzero);
    CHECK(certify_nonzero_coefficients(SeriesKind::Ahat, 4).all_nonzero);
    CHECK_THROWS_AS(certify_nonzero_coefficients(SeriesKind::L, 0), PreconditionError);
}

TEST_CASE("classical genera of the shipped fixtures") {
    const ManifoldData cp2 = load_fixture("cp2.json");
    const ManifoldData hp2 = load_fixture("hp2.json");
    const ManifoldData k3 = load_fixture("k3.json");

    CHECK(genus_of_manifold(SeriesKind::L, cp2) == rat(1));
    CHECK(genus_of_manifold(SeriesKind::L, hp2) == rat(1));
    CHECK(genus_of_manifold(SeriesKind::L, k3) == rat(-16));
    CHECK(genus_of_manifold(SeriesKind::Ahat, k3) == rat(2));
    CHECK(genus_of_manifold(SeriesKind::Ahat, hp2) == rat(0));

    // dimension not divisible by 4: 0 by convention
    CHECK(genus_of_manifold(SeriesKind::L, product_with_sphere(cp2, 2)) == rat(0));
}

TEST_CASE("genera of sphere products vanish for every fixture") {
    // the total Pontryagin class pulls back from M, so no top-degree
    // component exists; in particular sign(S^k x M) = 0
    for (const char* name : {"cp2.json", "hp2.json", "k3.json"}) {
        const ManifoldData m = load_fixture(name);
        for (int n = 1; n <= 6; ++n) {
            const ManifoldData product = product_with_sphere(m, n);
            CHECK(genus_of_manifold(SeriesKind::L, product) == rat(0));
            CHECK(genus_of_manifold(SeriesKind::Ahat, product) == rat(0));
        }
    }
}

TEST_CASE("memoized tables are safe under concurrent lookup") {
    std::vector<const GenusTable*> seen(8, nullptr);
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&seen, t] { seen[static_cast<size_t>(t)] =
                                              &genus_polynomial(SeriesKind::Ahat, 5); });
    for (auto& thread : threads)
        thread.join();
    for (const GenusTable* table : seen) {
        REQUIRE(table != nullptr);
        CHECK(table == seen[0]);
        CHECK(table->degree == 5);
    }
}
