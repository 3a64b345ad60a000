#pragma once

#include "genusforge/cohomology.hpp"

#include <random>
#include <string>
#include <vector>

namespace genusforge::testing {

/// Deterministic stream of small valid descriptors (d <= 16, <= 6 basis
/// elements). Every draw is a Poincare-duality ring by construction: the
/// unit, the fundamental class, at most two complementary-degree pairs
/// pairing into the fundamental class, and optionally a middle-degree
/// square root of it. Some nonzero Pontryagin class is always present and
/// its dual solve is guaranteed to succeed.
class RandomManifoldStream {
public:
    explicit RandomManifoldStream(uint64_t seed) : rng_(seed) {}

    ManifoldData next() {
        for (int attempt = 0; attempt < 64; ++attempt) {
            if (auto m = try_draw())
                return *m;
        }
        throw Error("random manifold stream failed to draw a valid descriptor");
    }

    /// Smallest k >= 1 with (d + k) divisible by 4, shifted by a random
    /// multiple of 4 now and then for variety.
    int pick_k(const ManifoldData& m) {
        int k = (4 - m.dimension() % 4) % 4;
        if (k == 0)
            k = 4;
        if (coin(4))
            k += 4;
        return k;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    int counter_ = 0;

    bool coin(int one_in) { return pick(1, one_in) == 1; }
    int pick(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    Rational nonzero_scalar() {
        int v = pick(-9, 9);
        if (v == 0)
            v = 1;
        if (coin(3))
            return Rational(v, pick(1, 7));
        return Rational(v);
    }

    std::optional<ManifoldData> try_draw() {
        const int d = pick(4, 16);

        std::vector<BasisElement> basis{{"1", 0}, {"T", d}};
        std::vector<ProductEntry> products;
        std::map<int, CohomologyClass> pontryagin;

        // Degree-4j element with a pairing partner, carrying p_j.
        std::vector<int> quarter_degrees;
        for (int j = 1; 4 * j < d; ++j)
            quarter_degrees.push_back(4 * j);

        bool placed_pontryagin = false;
        if (!quarter_degrees.empty() && !coin(5)) {
            const int g = quarter_degrees[static_cast<size_t>(
                pick(0, static_cast<int>(quarter_degrees.size()) - 1))];
            basis.push_back({"a", g});
            basis.push_back({"b", d - g});
            products.push_back({"a", "b", CohomologyClass::single("T", nonzero_scalar()), ""});
            pontryagin[g / 4] = CohomologyClass::single("a", nonzero_scalar());
            placed_pontryagin = true;
            // occasionally a second, higher Pontryagin class on the partner
            if ((d - g) % 4 == 0 && coin(2))
                pontryagin[(d - g) / 4] += CohomologyClass::single("b", Rational(pick(-5, 5)));
        }
        if (!placed_pontryagin) {
            // top-degree-only manifold: p_{d/4} a multiple of the
            // fundamental class (the j = d/4 corner)
            if (d % 4 != 0)
                return std::nullopt;
            pontryagin[d / 4] = CohomologyClass::single("T", nonzero_scalar());
            placed_pontryagin = true;
        }

        // middle-degree element squaring into T (even middle degree only)
        if (d % 2 == 0 && (d / 2) % 2 == 0 && coin(2) && basis.size() + 1 <= 6) {
            basis.push_back({"w", d / 2});
            products.push_back({"w", "w", CohomologyClass::single("T", nonzero_scalar()), ""});
            if ((d / 2) % 4 == 0 && coin(2))
                pontryagin[d / 8] += CohomologyClass::single("w", Rational(pick(-4, 4)));
        }

        // an extra pair that pairs into T but carries no Pontryagin data
        if (basis.size() + 2 <= 6 && coin(2)) {
            const int g = pick(1, d - 1);
            basis.push_back({"s", g});
            basis.push_back({"t", d - g});
            products.push_back({"s", "t", CohomologyClass::single("T", nonzero_scalar()), ""});
        }

        const bool spin = coin(2);
        const bool simply_connected = !coin(5);
        const std::string name = "random" + std::to_string(counter_++);
        return ManifoldData::create(name, d, spin, simply_connected, std::move(basis),
                                    std::move(products), "T", std::move(pontryagin));
    }
};

} // namespace genusforge::testing
