#pragma once

#include "genusforge/cohomology.hpp"
#include "genusforge/partition.hpp"
#include "genusforge/power_series.hpp"

#include <optional>

namespace genusforge {

/// Degree-n multiplicative-sequence polynomial: K_n(p_1,...,p_n) =
/// sum over partitions I of n of coefficients[I] * p_I.
struct GenusTable {
    SeriesKind kind = SeriesKind::L;
    int degree = 0;
    PartitionMap<Rational> coefficients;

    const Rational& coefficient(const Partition& p) const;
    /// Coefficient of the partition {a, b} (order of a, b irrelevant).
    const Rational& coefficient_pair(int a, int b) const;
    /// Coefficient of {n}, the leading coefficient s_n.
    const Rational& coefficient_top() const;
};

/// K_n computed by formal-root expansion: expand the product of the
/// characteristic series over num_roots >= n formal roots, truncate to
/// total degree n, and rewrite elementary symmetric polynomials as
/// p_1,...,p_n by an exact linear solve over the partition basis. Uncached;
/// num_roots > n recomputes the same table by an independent route.
GenusTable genus_polynomial_with_roots(SeriesKind kind, int n, int num_roots);

/// Memoized K_n with num_roots = n. The cache is write-once behind a
/// mutex; the returned reference stays valid for the program lifetime.
const GenusTable& genus_polynomial(SeriesKind kind, int n);

struct NonzeroCertificate {
    bool all_nonzero = false;
    /// Offending (degree, partition) when a zero coefficient exists.
    std::optional<std::pair<int, Partition>> witness;
};

/// Checks every coefficient of K_1..K_up_to for the given kind.
NonzeroCertificate certify_nonzero_coefficients(SeriesKind kind, int up_to);

/// Genus of a closed manifold descriptor: sum over partitions I of d/4 of
/// coefficient[I] * <p_I(TM), [M]>, evaluated exactly in M's ring. Returns
/// 0 when the dimension is not divisible by 4 (no top-degree 4i-class).
Rational genus_of_manifold(SeriesKind kind, const ManifoldData& m);

} // namespace genusforge
