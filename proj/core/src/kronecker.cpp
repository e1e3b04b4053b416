#include "charcover/kronecker.hpp"

#include "charcover/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace charcover {

BigInt kron_coeff(const CharacterTable& table, const Partition& mu, const Partition& nu,
                  const Partition& lambda) {
    int n = table.n();
    if (mu.weight() != n || nu.weight() != n || lambda.weight() != n)
        throw std::invalid_argument("kron_coeff: partitions must have weight n");
    int a = table.index_of(mu), b = table.index_of(nu), c = table.index_of(lambda);
    BigInt s = 0;
    for (std::size_t k = 0; k < table.size(); ++k)
        s += table.classes()[k].class_size * table.value(a, static_cast<int>(k)) *
             table.value(b, static_cast<int>(k)) * table.value(c, static_cast<int>(k));
    BigInt nf = factorial(n);
    if (s % nf != 0) throw std::logic_error("kron_coeff: non-integral value");
    return s / nf;
}

std::map<Partition, BigInt> kron_decompose(const CharacterTable& table, const Partition& mu,
                                           const Partition& nu) {
    if (mu.weight() != table.n() || nu.weight() != table.n())
        throw std::invalid_argument("kron_decompose: partitions must have weight n");
    ClassFunction prod =
        table.irreducible(table.index_of(mu)).pointwise(table.irreducible(table.index_of(nu)));
    return decompose(table, prod);
}

DoubleHookForm double_hook_form(const Partition& lambda) {
    if (durfee_rank(lambda) != 2)
        throw std::invalid_argument("double_hook_form: Durfee rank must be 2");
    DoubleHookForm f;
    f.n4 = lambda.at(0);
    f.n3 = lambda.at(1);
    for (int i = 2; i < lambda.length(); ++i) {
        if (lambda.at(i) == 2) ++f.d2;
        else ++f.d1;  // rank 2 forces parts <= 2 beyond row 2
    }
    return f;
}

int hook_hook_kron(int e, int f, const Partition& lambda) {
    int n = lambda.weight();
    if (!(1 <= e && e <= f && e + f <= n - 1))
        throw std::invalid_argument("hook_hook_kron: need 1 <= e <= f, e + f <= n - 1");
    int d = durfee_rank(lambda);
    if (d > 2) return 0;
    if (lambda == Partition(std::vector<int>{n})) return e == f ? 1 : 0;
    if (lambda.at(0) == 1) return e + f == n - 1 ? 1 : 0;  // (1^n)
    if (d == 1) {
        int r = lambda.length() - 1;  // (n-r, 1^r)
        return (f - e <= r && r <= e + f) ? 1 : 0;
    }
    DoubleHookForm dh = double_hook_form(lambda);
    int x = 2 * dh.d2 + dh.d1;
    int s = e + f - x;  // compare halves by doubling
    int term1 = (2 * (dh.n3 - 1) <= s && s <= 2 * dh.n4 && f - e <= dh.d1) ? 1 : 0;
    int term2 = (2 * dh.n3 <= s + 1 && s + 1 <= 2 * dh.n4 && f - e <= dh.d1 + 1) ? 1 : 0;
    return term1 + term2;
}

int hook_kron(int e, int f, const Partition& lambda) {
    if (e > f) std::swap(e, f);
    return hook_hook_kron(e, f, lambda);
}

namespace {

// Enumerate all non-negative integer matrices with the given row and column
// sums, row by row; matrices are not deduplicated.
void enumerate_matrices(const std::vector<int>& rows, std::vector<int>& colrem,
                        std::size_t r, std::vector<int>& entries,
                        const std::function<void(const std::vector<int>&)>& emit,
                        std::vector<int>& scratch) {
    if (r == rows.size()) {
        emit(entries);
        return;
    }
    int target = rows[r];
    std::size_t cols = colrem.size();
    // remaining capacity prune: future rows must absorb what this row leaves
    std::function<void(std::size_t, int)> rec = [&](std::size_t c, int left) {
        if (c == cols) {
            if (left == 0) enumerate_matrices(rows, colrem, r + 1, entries, emit, scratch);
            return;
        }
        int avail = colrem[c];
        // the columns after c must be able to absorb the rest
        int tailcap = 0;
        for (std::size_t cc = c + 1; cc < cols; ++cc) tailcap += colrem[cc];
        int lo = std::max(0, left - tailcap);
        int hi = std::min(avail, left);
        for (int a = lo; a <= hi; ++a) {
            colrem[c] -= a;
            if (a > 0) entries.push_back(a);
            rec(c + 1, left - a);
            if (a > 0) entries.pop_back();
            colrem[c] += a;
        }
    };
    rec(0, target);
    (void)scratch;
}

} // namespace

std::map<Partition, BigInt> h_product_matrices(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("h_product_matrices: partitions must have equal weight");
    std::map<Partition, BigInt> out;
    std::vector<int> colrem = mu.parts();
    std::vector<int> entries;
    std::vector<int> scratch;
    enumerate_matrices(lambda.parts(), colrem, 0, entries,
                       [&](const std::vector<int>& es) {
                           std::vector<int> sorted = es;
                           std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                           out[Partition(std::move(sorted))] += 1;
                       },
                       scratch);
    return out;
}

BigInt blasiak_rhs(const Partition& lambda, const Partition& nu, int d) {
    int n = lambda.weight();
    if (nu.weight() != n) throw std::invalid_argument("blasiak_rhs: weights differ");
    if (d < 1 || d > n - 1) throw std::invalid_argument("blasiak_rhs: need 1 <= d <= n-1");
    BigInt total = 0;
    for (const Partition& alpha : partitions_of(d)) {
        Partition alpha_c = conjugate(alpha);
        for (const Partition& beta : partitions_of(n - d)) {
            std::int64_t c1 = lr_coefficient(lambda, beta, alpha);
            if (c1 == 0) continue;
            std::int64_t c2 = lr_coefficient(nu, beta, alpha_c);
            if (c2 == 0) continue;
            total += BigInt(c1) * c2;
        }
    }
    return total;
}

std::array<BigInt, 4> zisser_multiplicities(const Partition& lambda) {
    if (lambda.weight() < 4)
        throw std::invalid_argument("zisser_multiplicities: need n >= 4");
    BigInt d1 = d_stat(lambda, 1);
    BigInt d2 = d_stat(lambda, 2);
    BigInt d2c = d_stat(conjugate(lambda), 2);
    return {BigInt(1), d1 - 1, d1 * (d1 - 2) + d2 + d2c, (d1 - 1) * (d1 - 1)};
}

std::array<BigInt, 3> n3_multiplicities(const Partition& lambda) {
    if (lambda.weight() < 6)
        throw std::invalid_argument("n3_multiplicities: need n >= 6");
    Partition lc = conjugate(lambda);
    BigInt d1 = d_stat(lambda, 1), d1c = d_stat(lc, 1);
    BigInt d2 = d_stat(lambda, 2), d2c = d_stat(lc, 2);
    BigInt d3 = d_stat(lambda, 3), d3c = d_stat(lc, 3);
    KlStats kl = kl_stats(lambda);
    BigInt k = kl.k, l = kl.l;
    BigInt a = d3 + d3c + d2 * (2 * d1 - 3) + d2c * (2 * d1c - 3) +
               d1 * (d1 - 1) * (d1 - 3) + k + l;
    BigInt b = d2 * (3 * d1 - 4) + d2c * (3 * d1c - 4) +
               d1 * (2 * d1 * d1 - 8 * d1 + 7) + k + l;
    BigInt c = d2 * (d1 - 1) + d2c * (d1c - 1) + (d1 - 1) * (d1 * d1 - 3 * d1 + 1) + k + l;
    return {a, b, c};
}

} // namespace charcover
