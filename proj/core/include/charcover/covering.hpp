#pragma once

#include "charcover/character_table.hpp"

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace charcover {

// Set of irreducibles (partitions of n) as a bitset over the canonical index.
struct ConstituentSet {
    int n = 0;
    std::vector<bool> bits;

    static ConstituentSet empty(int n) {
        return ConstituentSet{n, std::vector<bool>(partition_count(n), false)};
    }
    static ConstituentSet full(int n) {
        return ConstituentSet{n, std::vector<bool>(partition_count(n), true)};
    }
    static ConstituentSet single(const Partition& p) {
        ConstituentSet s = empty(p.weight());
        s.bits[static_cast<std::size_t>(partition_index(p))] = true;
        return s;
    }

    bool has(int idx) const { return bits[static_cast<std::size_t>(idx)]; }
    bool has(const Partition& p) const { return has(partition_index(p)); }
    void add(int idx) { bits[static_cast<std::size_t>(idx)] = true; }
    void add(const Partition& p) { add(partition_index(p)); }
    std::size_t count() const;
    bool is_full() const;
    ConstituentSet& unite(const ConstituentSet& o);
    bool contains_set(const ConstituentSet& o) const;  // o subset of *this
    std::vector<Partition> members() const;

    bool operator==(const ConstituentSet& o) const { return n == o.n && bits == o.bits; }
};

// Support of a genuine character; negative or non-integral multiplicities
// are hard errors.
ConstituentSet constituents(const CharacterTable& table, const ClassFunction& f);

// Memoized supports of pairwise products of irreducibles; thread-safe.
// Covering-number computations only need supports, never multiplicities.
class KronSupportCache {
public:
    explicit KronSupportCache(const CharacterTable& t) : t_(t) {}
    const CharacterTable& table() const { return t_; }
    ConstituentSet product_support(int a, int b);

private:
    const CharacterTable& t_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, ConstituentSet> cache_;
};

// Union over mu in S of supp(chi_mu chi_lambda).
ConstituentSet product_closure_step(KronSupportCache& cache, const ConstituentSet& s,
                                    const Partition& lambda);

struct CcnResult {
    enum class Status { found, not_covering, cap_exhausted };
    Status status = Status::found;
    int value = 0;                     // meaningful when status == found
    std::vector<std::size_t> growth;   // |c(chi^k)| for k = 1, 2, ...

    bool found() const { return status == Status::found; }
};

// Least k <= cap with c(chi_lambda^k) = Irr(S_n).  Linear characters yield
// not_covering; hitting the cap yields cap_exhausted.  Default cap: n.
CcnResult ccn_char(KronSupportCache& cache, const Partition& lambda, int cap = -1);
CcnResult ccn_char(const CharacterTable& table, const Partition& lambda, int cap = -1);

// All partitions reachable from mu as sorted nonzero entries of a
// mu x lambda contingency matrix (deduplicated).
std::vector<Partition> sigma_successors(const Partition& mu, const Partition& lambda);

// Least k with sigma_(1^n) a constituent of sigma_lambda^k: BFS distance
// from (n) to (1^n) under sigma_successors.  lambda = (n) never terminates
// (not_covering).  Default cap: n.
CcnResult ccn_sigma(const Partition& lambda, int cap = -1);

// One step of a splitting sequence: a two-column contingency matrix whose
// rows align with the parts of the previous partition.
struct SplitStep {
    std::vector<std::array<int, 2>> rows;
};

struct SplitSequence {
    Partition generator;            // two-row partition (n-k, k)
    std::vector<Partition> steps;   // alpha_0 = (n), ..., alpha_r = (1^n)
    std::vector<SplitStep> matrices;  // matrices[i]: steps[i] -> steps[i+1]

    int length() const { return static_cast<int>(steps.size()) - 1; }
};

// The explicit sequence showing ccn(sigma_(n-k,k)) <= ceil(2(n-1)/(k+1)),
// for 1 <= k <= floor(sqrt(n)).  Every step is a legal matrix collapse; the
// final length is checked against the closed form.
SplitSequence tworow_split_sequence(int n, int k);

// The halving sequence for generator (k, k-1), k = (n+1)/2, odd n >= 5;
// length ceil(log2 n).
SplitSequence halving_sequence(int n);

// Throws std::logic_error with a description if any step is not a legal
// collapse (row sums, column sums, sorted nonzero entries).
void validate_split_sequence(const SplitSequence& s);

// { mu : |lambda \ mu| <= k r }, the support of sigma_mu(k)^r chi_lambda.
ConstituentSet hook_power_constituents(const Partition& lambda, int k, int r);

// Support of the product of all non-linear hook characters chi_(n-k,1^k),
// 1 <= k <= n-2; true iff it is all of Irr(S_n).  Requires n >= 5.
bool product_of_hooks_covers(KronSupportCache& cache);

struct ConjectureCase {
    Partition lambda;
    int power = 0;
    bool equal = false;  // c(chi^power) == c(sigma^power)
};

// Evidence report for the two-row constituent-set conjecture; never an
// assertion of the conjecture itself.
struct ConjectureReport {
    int n = 0;
    std::vector<ConjectureCase> cases;
    std::optional<int> half_rect_ccn;  // ccn for (n/2, n/2), even n
    int log_bound = 0;                 // ceil(log2 n)
    bool half_rect_in_bracket = false;
    bool counterexample_found = false;
};
ConjectureReport conjecture_status(KronSupportCache& cache);

} // namespace charcover
