#pragma once

#include "charcover/numeric.hpp"
#include "charcover/partition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace charcover {

// Exact integer class function on S_n, indexed by the canonical partition
// list of n (descending lexicographic).
struct ClassFunction {
    int n = 0;
    std::vector<BigInt> values;

    ClassFunction() = default;
    ClassFunction(int n_, std::vector<BigInt> v) : n(n_), values(std::move(v)) {}

    ClassFunction pointwise(const ClassFunction& o) const;
    ClassFunction pointwise_power(int k) const;
};

// Class data for all cycle types of n in canonical order; cached.
const std::vector<CycleClassData>& class_data_of(int n);

// chi_lambda(w_mu) by signed border-strip removal (strip length = first
// remaining part of mu, sign (-1)^(height-1)); memoized across calls.
BigInt mn_value(const Partition& lambda, const Partition& mu);

// Same recursion consuming mu's parts in the given order; the result is
// independent of the order (exercised by tests).
BigInt mn_value_ordered(const Partition& lambda, const std::vector<int>& parts_in_order);

// Degree of chi_lambda by the hook length formula.
BigInt hook_length_degree(const Partition& lambda);

class CharacterTable {
public:
    static CharacterTable build(int n);

    int n() const { return n_; }
    const std::vector<Partition>& irreducibles() const { return parts_; }
    const std::vector<CycleClassData>& classes() const { return classes_; }
    std::size_t size() const { return parts_.size(); }

    const BigInt& value(int lam, int mu) const {
        return chi_[static_cast<std::size_t>(lam)][static_cast<std::size_t>(mu)];
    }
    const std::vector<BigInt>& row(int lam) const { return chi_[static_cast<std::size_t>(lam)]; }
    ClassFunction irreducible(int lam) const { return ClassFunction(n_, row(lam)); }
    const BigInt& degree(int lam) const;  // column of class (1^n)

    int index_of(const Partition& lam) const;

    // exact row orthogonality, degree column, and conjugate-sign relation
    bool self_check(std::string* why = nullptr) const;

    std::string to_cache_json() const;
    static CharacterTable from_cache_json(const std::string& text);

private:
    int n_ = 0;
    std::vector<Partition> parts_;
    std::vector<CycleClassData> classes_;
    std::vector<std::vector<BigInt>> chi_;
    int identity_class_ = 0;
};

// <f, g> = (1/n!) sum_mu class_size(mu) f(mu) g(mu); S_n characters are
// rational-valued so no conjugation is needed.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// Multiplicities <f, chi_lambda> for all lambda.  Any non-integral
// multiplicity is a hard error (std::domain_error), never rounded.
std::map<Partition, BigInt> decompose(const CharacterTable& table, const ClassFunction& f);

// Permutation character sigma_mu = sum_lambda K_{lambda mu} chi_lambda.
ClassFunction sigma_character(const CharacterTable& table, const Partition& mu);

// Multiplicities of external tensor products in the restriction of
// chi_lambda to the Young subgroup of the given composition, by iterated
// LR coefficients.  The composition must sum to |lambda|.
std::map<std::vector<Partition>, BigInt> restrict_to_young(const Partition& lambda,
                                                           const std::vector<int>& composition);

struct TableOptions {
    int sym_limit = 14;
    int alt_limit = 12;
    std::optional<std::string> cache_dir;  // no disk cache when absent
};

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class AltTable;

// Owns lazily built character tables, optionally mirrored on disk.  Cached
// files failing the orthogonality self-check are rebuilt with a warning.
class TableStore {
public:
    TableStore() = default;
    explicit TableStore(TableOptions opt) : opt_(std::move(opt)) {}
    ~TableStore();

    const TableOptions& options() const { return opt_; }
    const CharacterTable& sym(int n);
    const AltTable& alt(int n);  // defined in alternating.cpp

private:
    TableOptions opt_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<CharacterTable>> sym_;
    std::map<int, std::shared_ptr<AltTable>> alt_;

    friend const AltTable& table_store_alt(TableStore&, int);
};

} // namespace charcover
