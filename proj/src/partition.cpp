#include "borderlim/partition.hpp"

#include "borderlim/errors.hpp"
#include "borderlim/rational.hpp"

namespace borderlim {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw error("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool PartitionTuple::pure() const {
    for (const auto& p : partitions_)
        if (p.empty()) return false;
    return true;
}

bool PartitionTuple::all_one_row() const {
    for (const auto& p : partitions_)
        if (!p.is_one_row()) return false;
    return true;
}

long long schur_dim(const Partition& lambda, int level) {
    if (level < 0) throw error("level must be non-negative");
    // product over cells (i,j) of (N + j - i) / hook(i,j)
    const auto& parts = lambda.parts();
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 1; j <= parts[i]; ++j) {
            num *= level + j - static_cast<int>(i) - 1;
            int arm = parts[i] - j;
            int leg = 0;
            for (std::size_t k = i + 1; k < parts.size(); ++k)
                if (parts[k] >= j) ++leg;
            den *= arm + leg + 1;
        }
    }
    Integer d = num / den;
    return d.convert_to<long long>();
}

} // namespace borderlim
