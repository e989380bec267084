#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace autbound {

/// A partition of N, blocks kept non-increasing.
class Partition {
public:
    Partition() = default;
    /// Sorts the blocks; throws InvalidInput on a non-positive block.
    explicit Partition(std::vector<int> blocks);

    /// (1^N).
    static Partition ones(int n);
    /// Parses "4,2,1" (any order, whitespace ignored). Throws MalformedInput.
    static Partition parse(std::string_view text);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] int length() const { return static_cast<int>(blocks_.size()); }
    [[nodiscard]] const std::vector<int>& blocks() const { return blocks_; }
    /// mu_k, the number of blocks equal to k.
    [[nodiscard]] int multiplicity(int k) const;
    [[nodiscard]] bool is_fermat() const;

    /// Exponent notation, e.g. "(4,2^2,1)".
    [[nodiscard]] std::string to_string() const;
    /// Plain list, e.g. "4,2,2,1".
    [[nodiscard]] std::string to_list() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks_ == b.blocks_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> blocks_;
    int n_ = 0;
};

/// Disjoint union of the block multisets.
Partition concat(const Partition& a, const Partition& b);

/// All partitions of n in descending lexicographic order, (n) first and
/// (1^n) last.
std::vector<Partition> partitions(int n);

}  // namespace autbound
