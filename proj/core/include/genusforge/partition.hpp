#pragma once

#include "genusforge/rational.hpp"

#include <map>
#include <vector>

namespace genusforge {

/// Integer partition: weakly decreasing positive parts. Indexes genus
/// coefficients and elementary Pontryagin numbers. The empty partition has
/// weight 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// "[1,2]": parts in ascending order, the serialization key format.
    std::string json_key() const;

    /// "p1^2·p2": the Pontryagin monomial the partition indexes.
    std::string monomial() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;

    /// Canonical order: lexicographically descending on the part lists,
    /// i.e. the order in which partitions_of enumerates. {3} < {2,1} < {1,1,1}.
    struct CanonicalOrder {
        bool operator()(const Partition& a, const Partition& b) const {
            return a.parts_ > b.parts_;
        }
    };

private:
    std::vector<int> parts_;
};

template <typename T>
using PartitionMap = std::map<Partition, T, Partition::CanonicalOrder>;

/// All partitions of n in canonical (lexicographically descending) order,
/// each exactly once. partitions_of(0) is {empty}.
std::vector<Partition> partitions_of(int n);

} // namespace genusforge
