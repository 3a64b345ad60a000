#include "genusforge/partition.hpp"

#include <algorithm>
#include <numeric>

namespace genusforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw PreconditionError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw PreconditionError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::json_key() const {
    std::string out = "[";
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (it != parts_.rbegin())
            out += ',';
        out += std::to_string(*it);
    }
    out += ']';
    return out;
}

std::string Partition::monomial() const {
    if (parts_.empty())
        return "1";
    std::string out;
    // ascending parts, equal parts folded into an exponent
    for (auto it = parts_.rbegin(); it != parts_.rend();) {
        const int part = *it;
        int count = 0;
        while (it != parts_.rend() && *it == part) {
            ++count;
            ++it;
        }
        if (!out.empty())
            out += "·";
        out += "p" + std::to_string(part);
        if (count > 1)
            out += "^" + std::to_string(count);
    }
    return out;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw PreconditionError("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

} // namespace genusforge
