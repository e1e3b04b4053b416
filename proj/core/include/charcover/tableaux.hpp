#pragma once

#include "charcover/partition.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace charcover {

// A filling of a (skew) shape: entries[i] holds row i's values left to right,
// one per box of shape.row_size(i).  Rows weakly increase, columns strictly
// increase; content sorted is the type.
struct SemiStandardFilling {
    SkewShape shape;
    std::vector<std::vector<int>> entries;

    bool is_semistandard() const;
    // content as a partition; throws if the content vector, sorted, is not
    // weakly decreasing when read by value multiplicity (it always is; the
    // partition is the sorted multiplicity-of-each-value vector)
    Partition content() const;
    // traverse rows top to bottom reading right to left along each row
    std::vector<int> reverse_reading_word() const;
    // concatenate rows bottom to top, left to right
    std::vector<int> reading_word() const;
};

// every prefix has #i >= #(i+1) for all i
bool is_lattice(std::span<const int> word);

// Number of SSYT of shape lambda and type mu, by backtracking enumeration.
// Type arguments are partitions (compositions are rejected by the Partition
// type itself).  Throws on unequal weights.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

// Littlewood-Richardson coefficient c^lambda_{mu nu}: SSYT of shape
// lambda/mu and type nu whose reverse reading word is a lattice permutation.
// Returns 0 when mu is not contained in lambda; throws when
// |mu| + |nu| != |lambda|.  With early_exit, stops after the first tableau.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu, bool early_exit = false);

bool is_horizontal_strip(const SkewShape& s);  // each column has <= 1 box
bool is_vertical_strip(const SkewShape& s);    // each row has <= 1 box

// Decomposition of the permutation character sigma_mu: lambda -> K_{lambda mu};
// support is exactly { lambda : mu trianglelefteq lambda }.
std::map<Partition, std::int64_t> young_rule(const Partition& mu);

} // namespace charcover
