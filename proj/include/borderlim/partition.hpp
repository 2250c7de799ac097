#pragma once

#include <string>
#include <vector>

namespace borderlim {

// Weakly decreasing list of positive parts; the empty partition is allowed.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;  // |lambda|
    int rows() const { return static_cast<int>(parts_.size()); }
    bool is_one_row() const { return parts_.size() <= 1; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

  private:
    std::vector<int> parts_;
};

class PartitionTuple {
  public:
    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> partitions) : partitions_(std::move(partitions)) {}

    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t size() const { return partitions_.size(); }
    const Partition& operator[](std::size_t i) const { return partitions_[i]; }
    // a tuple is pure when it does not contain the empty partition
    bool pure() const;
    bool all_one_row() const;

    bool operator==(const PartitionTuple& o) const { return partitions_ == o.partitions_; }
    bool operator!=(const PartitionTuple& o) const { return !(*this == o); }

  private:
    std::vector<Partition> partitions_;
};

// dim S_lambda(K^N) by the hook content formula; zero when lambda has more
// than N rows.
long long schur_dim(const Partition& lambda, int level);

} // namespace borderlim
