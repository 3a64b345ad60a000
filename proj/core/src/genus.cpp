#include "genusforge/genus.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace genusforge {

namespace {

// Monomials over the formal roots, packed 4 bits per root. Bounds the
// expansion engine to degree <= 15 and <= 16 roots; the cost of the
// expansion is C(2n, n) monomials, so larger degrees are out of reach for
// this method anyway.
constexpr int kMaxDegree = 15;
constexpr int kMaxRoots = 16;

using PackedMonomial = std::uint64_t;
using MPoly = std::unordered_map<PackedMonomial, Rational>;

int total_degree(PackedMonomial m) {
    int sum = 0;
    while (m != 0) {
        sum += static_cast<int>(m & 0xF);
        m >>= 4;
    }
    return sum;
}

PackedMonomial bump(PackedMonomial m, int var, int by) {
    return m + (static_cast<PackedMonomial>(by) << (4 * var));
}

// poly * series(x_var), truncated to total degree max_degree.
MPoly multiply_by_series(const MPoly& poly, int var, const std::vector<Rational>& series,
                         int max_degree) {
    MPoly out;
    out.reserve(poly.size() * 2);
    for (const auto& [mono, coeff] : poly) {
        const int room = max_degree - total_degree(mono);
        for (int t = 0; t <= room && t < static_cast<int>(series.size()); ++t) {
            const Rational& s = series[static_cast<size_t>(t)];
            if (s.is_zero())
                continue;
            auto [it, inserted] = out.try_emplace(bump(mono, var, t), s * coeff);
            if (!inserted)
                it->second += s * coeff;
        }
    }
    return out;
}

PackedMonomial representative(const Partition& p) {
    PackedMonomial mono = 0;
    for (size_t i = 0; i < p.parts().size(); ++i)
        mono = bump(mono, static_cast<int>(i), p.parts()[i]);
    return mono;
}

PackedMonomial pack_sorted(const std::vector<int>& values) {
    PackedMonomial key = 0;
    for (size_t i = 0; i < values.size(); ++i)
        key = bump(key, static_cast<int>(i), values[i]);
    return key;
}

// Number of 0/1 matrices with the given row and column sums: the
// coefficient of the column-sum monomial in prod_t e_{row_t}, i.e. the
// transition coefficient from elementary symmetric products to the
// monomial basis.
class MatrixCounter {
public:
    explicit MatrixCounter(const std::vector<int>& rows) : rows_(rows) {}

    BigInt count(std::vector<int> cols) {
        std::sort(cols.begin(), cols.end(), std::greater<>());
        return go(0, std::move(cols));
    }

private:
    const std::vector<int>& rows_;
    std::map<std::pair<size_t, PackedMonomial>, BigInt> memo_;

    BigInt go(size_t row, std::vector<int> cols) {
        while (!cols.empty() && cols.back() == 0)
            cols.pop_back();
        if (row == rows_.size())
            return cols.empty() ? 1 : 0;
        if (cols.empty())
            return 0;

        const auto key = std::make_pair(row, pack_sorted(cols));
        if (const auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // group equal column sums; distribute this row's ones per group
        std::vector<std::pair<int, int>> groups; // (value, count)
        for (int v : cols) {
            if (!groups.empty() && groups.back().first == v)
                ++groups.back().second;
            else
                groups.emplace_back(v, 1);
        }

        BigInt total = 0;
        std::vector<int> chosen(groups.size(), 0);
        const auto recurse = [&](auto&& self, size_t g, int remaining) -> void {
            if (g == groups.size()) {
                if (remaining != 0)
                    return;
                BigInt ways = 1;
                std::vector<int> next;
                for (size_t i = 0; i < groups.size(); ++i) {
                    ways *= binomial(groups[i].second, chosen[i]);
                    for (int c = 0; c < groups[i].second - chosen[i]; ++c)
                        next.push_back(groups[i].first);
                    for (int c = 0; c < chosen[i]; ++c)
                        next.push_back(groups[i].first - 1);
                }
                std::sort(next.begin(), next.end(), std::greater<>());
                total += ways * go(row + 1, std::move(next));
                return;
            }
            for (int k = 0; k <= std::min(groups[g].second, remaining); ++k) {
                chosen[g] = k;
                self(self, g + 1, remaining - k);
            }
        };
        recurse(recurse, 0, rows_[row]);

        memo_.emplace(key, total);
        return total;
    }
};

// Entry [lambda][mu] = coefficient of the monomial with exponents lambda
// in e_mu. Independent of the series kind and of the number of roots, so
// cached per degree.
using TransitionMatrix = std::vector<std::vector<Rational>>;

const TransitionMatrix& transition_matrix(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const TransitionMatrix>> cache;

    {
        std::lock_guard<std::mutex> lock(mutex);
        if (const auto it = cache.find(n); it != cache.end())
            return *it->second;
    }

    const std::vector<Partition> parts = partitions_of(n);
    const size_t count = parts.size();
    auto matrix = std::make_unique<TransitionMatrix>(count, std::vector<Rational>(count));
    for (size_t mu = 0; mu < count; ++mu) {
        MatrixCounter counter(parts[mu].parts());
        for (size_t lambda = 0; lambda < count; ++lambda)
            (*matrix)[lambda][mu] = Rational(counter.count(parts[lambda].parts()));
    }

    std::lock_guard<std::mutex> lock(mutex);
    const auto [it, inserted] = cache.try_emplace(n, std::move(matrix));
    return *it->second;
}

// Exact Gauss-Jordan solve of a square system; the elementary-symmetric
// transition matrix is unimodular, so a unique solution always exists.
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            throw Error("internal: singular partition transition matrix");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational lead = a[col][col];
        for (size_t j = col; j < n; ++j)
            a[col][j] /= lead;
        rhs[col] /= lead;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero())
                continue;
            const Rational factor = a[r][col];
            for (size_t j = col; j < n; ++j)
                a[r][j] -= factor * a[col][j];
            rhs[r] -= factor * rhs[col];
        }
    }
    return rhs;
}

} // namespace

const Rational& GenusTable::coefficient(const Partition& p) const {
    const auto it = coefficients.find(p);
    if (it == coefficients.end())
        throw PreconditionError("partition " + p.json_key() + " is not a partition of " +
                                std::to_string(degree));
    return it->second;
}

const Rational& GenusTable::coefficient_pair(int a, int b) const {
    std::vector<int> parts = {std::max(a, b), std::min(a, b)};
    return coefficient(Partition(std::move(parts)));
}

const Rational& GenusTable::coefficient_top() const {
    return coefficient(Partition(std::vector<int>{degree}));
}

GenusTable genus_polynomial_with_roots(SeriesKind kind, int n, int num_roots) {
    if (n < 1)
        throw PreconditionError("genus polynomial degree must be >= 1");
    if (num_roots < n)
        throw PreconditionError("need at least n formal roots");
    if (n > kMaxDegree || num_roots > kMaxRoots)
        throw PreconditionError("genus polynomial degree beyond the expansion engine limit (15)");

    const PowerSeries series = characteristic_series(kind, n);
    const std::vector<Rational>& q = series.coefficients();

    // prod_{i=1..N} Q(x_i), truncated to total degree n
    MPoly product{{PackedMonomial(0), Rational(1)}};
    for (int var = 0; var < num_roots; ++var)
        product = multiply_by_series(product, var, q, n);

    const std::vector<Partition> parts = partitions_of(n);
    const size_t count = parts.size();

    std::vector<Rational> target(count);
    for (size_t i = 0; i < count; ++i) {
        const auto it = product.find(representative(parts[i]));
        target[i] = it == product.end() ? Rational() : it->second;
    }

    const std::vector<Rational> solution = solve_square(transition_matrix(n), std::move(target));

    GenusTable table;
    table.kind = kind;
    table.degree = n;
    for (size_t i = 0; i < count; ++i)
        table.coefficients.emplace(parts[i], solution[i]);
    return table;
}

const GenusTable& genus_polynomial(SeriesKind kind, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const GenusTable>> cache;

    const auto key = std::make_pair(static_cast<int>(kind), n);
    {
        std::lock_guard<std::mutex> lock(mutex);
        const auto it = cache.find(key);
        if (it != cache.end())
            return *it->second;
    }
    auto table = std::make_unique<const GenusTable>(genus_polynomial_with_roots(kind, n, n));
    std::lock_guard<std::mutex> lock(mutex);
    const auto [it, inserted] = cache.try_emplace(key, std::move(table));
    return *it->second;
}

NonzeroCertificate certify_nonzero_coefficients(SeriesKind kind, int up_to) {
    if (up_to < 1)
        throw PreconditionError("certificate degree must be >= 1");
    for (int n = 1; n <= up_to; ++n) {
        const GenusTable& table = genus_polynomial(kind, n);
        for (const auto& [partition, coeff] : table.coefficients) {
            if (coeff.is_zero())
                return NonzeroCertificate{false, std::make_pair(n, partition)};
        }
    }
    return NonzeroCertificate{true, std::nullopt};
}

Rational genus_of_manifold(SeriesKind kind, const ManifoldData& m) {
    if (m.dimension() % 4 != 0)
        return Rational(0);
    const int n = m.dimension() / 4;
    const GenusTable& table = genus_polynomial(kind, n);
    const RingModel ring = RingModel::base(m);

    Rational acc;
    for (const auto& [partition, coeff] : table.coefficients) {
        CohomologyClass monomial = ring.unit();
        for (int part : partition.parts()) {
            monomial = ring.multiply(monomial, m.pontryagin_class(part));
            if (monomial.is_zero())
                break;
        }
        acc += coeff * ring.evaluate(monomial);
    }
    return acc;
}

} // namespace genusforge
