#pragma once

#include "charcover/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace charcover {

// Weakly decreasing sequence of positive integers. Trailing zeros are never
// stored; accessors read absent parts as 0. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based; out-of-range reads as 0
    int at(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    int operator[](int i) const { return at(i); }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // lexicographic on the part vectors; the canonical table order is the
    // reverse of this (descending lexicographic)
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

    std::string str() const;  // explicit bracketed form, e.g. [4,3,2,2]

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Canonical order: descending lexicographic; position in this list is the
// canonical index used by every table in the library.
bool desclex_before(const Partition& a, const Partition& b);

// All partitions of n in canonical order; cached, thread-safe.
const std::vector<Partition>& partitions_of(int n);

// Index of p in partitions_of(p.weight()).
int partition_index(const Partition& p);

// Number of partitions of n.
std::size_t partition_count(int n);

Partition conjugate(const Partition& p);

// mu trianglelefteq lambda (prefix sums of mu bounded by those of lambda).
// Throws std::invalid_argument on unequal weights.
bool dominates(const Partition& lambda, const Partition& mu);

// Side of the largest square contained in the diagram.
int durfee_rank(const Partition& p);

// d_t = #{ i >= 1 : lambda_i - lambda_{i+1} >= t }, absent parts read as 0.
int d_stat(const Partition& p, int t);

// The pair (k, l) with
//   k = #{ i : lambda_i = lambda_{i+1}, lambda_{i+1} - lambda_{i+2} >= 2 }
//   l = #{ i : lambda_i - lambda_{i+1} = 1, lambda_{i+1} - lambda_{i+2} >= 1 }
// over i >= 1 with absent parts read as 0.  Both count skew shapes with
// three boxes in two adjacent rows, so i only contributes when row i+1 is
// nonempty.
struct KlStats {
    int k = 0;
    int l = 0;
};
KlStats kl_stats(const Partition& p);

// Number of boxes of lambda outside mu: sum_i max(lambda_i - mu_i, 0).
// Defined for equal weights only; throws otherwise.
int outside_count(const Partition& lambda, const Partition& mu);

// The hook (n-r, 1^r); requires 0 <= r <= n-1.
Partition hook_partition(int n, int r);

bool is_self_conjugate(const Partition& p);
bool has_distinct_odd_parts(const Partition& p);

// Folding bijection between partitions with distinct odd parts and
// self-conjugate partitions: the i-th principal hook of fold(mu) has size
// mu_i.  fold/unfold are mutually inverse; preconditions are checked.
Partition fold(const Partition& mu);
Partition unfold(const Partition& lambda);

struct CycleClassData {
    Partition mu;
    BigInt z;           // centralizer order: prod i^{m_i} m_i!
    BigInt class_size;  // n! / z
    int sign = 1;       // (-1)^(n - l(mu))
    std::optional<int> eps;  // (-1)^{m_1+m_2+...} for mu = (2m_1+1, 2m_2+1, ...),
                             // present only when mu has distinct odd parts
};
CycleClassData cycle_class_data(const Partition& mu);

struct BoxNeighbors {
    std::set<Partition> removals;    // lambda^-
    std::set<Partition> additions;   // lambda^+
    std::set<Partition> remove_add;  // lambda^{+-}: add a box to some element of lambda^-
};
BoxNeighbors box_neighbors(const Partition& p);

// Textual syntax: comma-separated parts, optional surrounding brackets,
// exponent notation for repeats ("2^3"); e.g. "4,3,2,2", "[4,3,2,2]",
// "2^2,1^2".  The empty string and "[]" denote the empty partition.
Partition parse_partition(const std::string& text);

// Ordered pair of nested partitions.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in);
    int box_count() const;
    // boxes in row i (0-based): columns inner[i]..outer[i]-1
    int row_size(int i) const { return outer.at(i) - inner.at(i); }
};

bool contains(const Partition& outer, const Partition& inner);

} // namespace charcover
