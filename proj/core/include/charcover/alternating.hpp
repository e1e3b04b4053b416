#pragma once

#include "charcover/character_table.hpp"
#include "charcover/covering.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace charcover {

// Exact number a + b*sqrt(disc) with rational a, b.  disc is an integer
// discriminant attached to one conjugacy class (eps_mu * z_mu); values from
// different classes are never combined.  b == 0 is normalized to disc == 0.
struct Surd {
    Rational a;
    Rational b;
    long long disc = 0;

    Surd() = default;
    Surd(Rational a_) : a(std::move(a_)) {}
    Surd(Rational a_, Rational b_, long long d) : a(std::move(a_)), b(std::move(b_)), disc(d) {
        if (b == 0) disc = 0;
    }

    bool is_rational() const { return b == 0; }
    Surd conj() const {  // complex conjugation: negates b when disc < 0
        if (disc < 0) return Surd(a, -b, disc);
        return *this;
    }
    Surd operator*(const Surd& o) const;
    Surd operator+(const Surd& o) const;
    bool operator==(const Surd& o) const { return a == o.a && b == o.b && disc == o.disc; }
    std::string str() const;
};

struct AltClass {
    Partition mu;      // even cycle type
    int split = 0;     // 0: non-split; +1 / -1: the two halves of a split type
    BigInt size;       // n!/z for non-split, n!/(2z) for each half
    long long disc = 0;  // eps_mu * z_mu on split classes
    int eps = 0;         // eps_mu on split classes
};

struct AltIrrLabel {
    enum class Kind { Pair, SplitPlus, SplitMinus };
    Kind kind = Kind::Pair;
    Partition lam;  // Pair: the desclex-earlier of {lam, lam'}; Split: lam = lam'

    bool operator==(const AltIrrLabel& o) const { return kind == o.kind && lam == o.lam; }
    bool operator<(const AltIrrLabel& o) const {
        if (!(lam == o.lam)) return desclex_before(lam, o.lam);
        return static_cast<int>(kind) < static_cast<int>(o.kind);
    }
    std::string str() const;
};

// A_n classes in canonical order: desclex on the cycle type, the plus half
// before the minus half of a split type.
std::vector<AltClass> an_classes(int n);

// Character table of A_n.  Rows follow the canonical label order: partitions
// in desclex order, lam != lam' contributing one Pair row (at the earlier of
// lam, lam'), lam = lam' contributing SplitPlus then SplitMinus.
class AltTable {
public:
    // The orientation decides which of the two split characters takes the
    // +sqrt value on the plus half of its exceptional class.  Every covering
    // statement is invariant under the swap; tests rely on that.
    enum class Orientation { standard, swapped };

    static AltTable build(const CharacterTable& sym, Orientation o = Orientation::standard);

    int n() const { return n_; }
    const std::vector<AltClass>& classes() const { return classes_; }
    const std::vector<AltIrrLabel>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<Surd>& row(int i) const { return values_[static_cast<std::size_t>(i)]; }
    const Surd& value(int row, int cls) const {
        return values_[static_cast<std::size_t>(row)][static_cast<std::size_t>(cls)];
    }
    int index_of(const AltIrrLabel& label) const;
    AltIrrLabel label_for(const Partition& lam, int branch = +1) const;
    BigInt degree(int row) const;
    const BigInt& group_order() const { return order_; }

    std::vector<Surd> product_row(int i, int j) const;
    // Hermitian inner product of two class-value vectors; the surd parts
    // must cancel across each split pair (hard error otherwise).
    Rational hermitian_inner(const std::vector<Surd>& f, const std::vector<Surd>& g) const;
    // Multiplicities of all irreducibles in the (genuine) character with the
    // given values; non-integral or negative results are hard errors.
    std::map<AltIrrLabel, BigInt> decompose_values(const std::vector<Surd>& f) const;

    bool self_check(std::string* why = nullptr) const;

    std::string to_cache_json() const;

private:
    int n_ = 0;
    BigInt order_;
    std::vector<AltClass> classes_;
    std::vector<AltIrrLabel> labels_;
    std::vector<std::vector<Surd>> values_;
    int identity_class_ = 0;
};

// Product decomposition of two irreducibles of A_n.
std::map<AltIrrLabel, BigInt> an_kron_decompose(const AltTable& t, const AltIrrLabel& x,
                                                const AltIrrLabel& y);

// Bitset over label indices with memoized pair supports, mirroring the S_n
// covering machinery.
struct AltConstituentSet {
    int count = 0;
    std::vector<bool> bits;

    static AltConstituentSet empty(std::size_t labels) {
        return AltConstituentSet{0, std::vector<bool>(labels, false)};
    }
    bool is_full() const { return static_cast<std::size_t>(count) == bits.size(); }
    void add(std::size_t i) {
        if (!bits[i]) { bits[i] = true; ++count; }
    }
    bool operator==(const AltConstituentSet& o) const { return bits == o.bits; }
};

class AltSupportCache {
public:
    explicit AltSupportCache(const AltTable& t) : t_(t) {}
    const AltTable& table() const { return t_; }
    AltConstituentSet product_support(int a, int b);

private:
    const AltTable& t_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, AltConstituentSet> cache_;
};

// Least k <= cap with c(x^k) = Irr(A_n); the trivial label never covers.
CcnResult ccn_an(AltSupportCache& cache, const AltIrrLabel& x, int cap = -1);

// Exhaustive check that for all lam != lam' and mu = mu',
// c(chi_lam | chi_mu^+) and c(chi_lam | chi_mu^-) agree away from chi_mu^{+-}.
bool alt_split_products_agree(const AltTable& t);

} // namespace charcover
