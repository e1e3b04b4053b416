#include "charcover/tableaux.hpp"

#include <algorithm>

namespace charcover {

bool SemiStandardFilling::is_semistandard() const {
    int rows = shape.outer.length();
    if (static_cast<int>(entries.size()) != rows) return false;
    for (int i = 0; i < rows; ++i) {
        int lo = shape.inner.at(i), hi = shape.outer.at(i);
        if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != hi - lo)
            return false;
        for (int j = lo; j < hi; ++j) {
            int v = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - lo)];
            if (v <= 0) return false;
            if (j > lo) {
                int left = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - lo - 1)];
                if (left > v) return false;
            }
            if (i > 0 && j >= shape.inner.at(i - 1) && j < shape.outer.at(i - 1)) {
                int up = entries[static_cast<std::size_t>(i - 1)]
                                [static_cast<std::size_t>(j - shape.inner.at(i - 1))];
                if (up >= v) return false;
            }
        }
    }
    return true;
}

Partition SemiStandardFilling::content() const {
    int maxv = 0;
    for (const auto& row : entries)
        for (int v : row) maxv = std::max(maxv, v);
    std::vector<int> mult(static_cast<std::size_t>(maxv), 0);
    for (const auto& row : entries)
        for (int v : row) ++mult[static_cast<std::size_t>(v - 1)];
    return Partition(std::move(mult));  // throws unless weakly decreasing
}

std::vector<int> SemiStandardFilling::reverse_reading_word() const {
    std::vector<int> w;
    for (const auto& row : entries)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

std::vector<int> SemiStandardFilling::reading_word() const {
    std::vector<int> w;
    for (auto rit = entries.rbegin(); rit != entries.rend(); ++rit)
        for (int v : *rit) w.push_back(v);
    return w;
}

bool is_lattice(std::span<const int> word) {
    std::vector<int> cnt;
    for (int v : word) {
        if (v <= 0) return false;
        if (static_cast<std::size_t>(v) > cnt.size()) cnt.resize(static_cast<std::size_t>(v), 0);
        ++cnt[static_cast<std::size_t>(v - 1)];
        if (v >= 2 && cnt[static_cast<std::size_t>(v - 1)] > cnt[static_cast<std::size_t>(v - 2)])
            return false;
    }
    return true;
}

namespace {

// Row-major SSYT counter for straight shapes.
struct KostkaCounter {
    const Partition& lambda;
    std::vector<int> collen;   // column lengths of lambda
    std::vector<int> remain;   // remaining count per value (1-based offset)
    std::vector<std::vector<int>> grid;
    int nvals;
    std::int64_t count = 0;

    KostkaCounter(const Partition& lam, const Partition& mu)
        : lambda(lam), nvals(mu.length()) {
        Partition lc = conjugate(lam);
        collen.resize(static_cast<std::size_t>(lam.at(0)), 0);
        for (int j = 0; j < lam.at(0); ++j) collen[static_cast<std::size_t>(j)] = lc.at(j);
        remain.resize(static_cast<std::size_t>(nvals) + 1, 0);
        for (int i = 0; i < mu.length(); ++i) remain[static_cast<std::size_t>(i + 1)] = mu.at(i);
        grid.assign(static_cast<std::size_t>(lam.length()), {});
        for (int i = 0; i < lam.length(); ++i)
            grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lam.at(i)), 0);
    }

    void fill(int i, int j) {
        if (i == lambda.length()) {
            ++count;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == lambda.at(i)) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
        if (i > 0 && lambda.at(i - 1) > j)
            lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
        // boxes strictly below (i,j) in column j need strictly larger values
        int below = collen[static_cast<std::size_t>(j)] - (i + 1);
        int hi = nvals - below;
        for (int v = lo; v <= hi; ++v) {
            if (remain[static_cast<std::size_t>(v)] == 0) continue;
            --remain[static_cast<std::size_t>(v)];
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            fill(ni, nj);
            ++remain[static_cast<std::size_t>(v)];
        }
    }
};

// LR tableau counter: fills boxes in reverse reading order (rows top to
// bottom, right to left within a row) so the lattice-word prefix condition
// can be checked incrementally.
struct LrCounter {
    const SkewShape& shape;
    std::vector<std::vector<int>> grid;  // grid[i][j-inner_i]
    std::vector<int> remain;             // per value
    std::vector<int> used;               // prefix counts for lattice check
    int nvals;
    bool early_exit;
    std::int64_t count = 0;

    LrCounter(const SkewShape& s, const Partition& nu, bool early)
        : shape(s), nvals(nu.length()), early_exit(early) {
        remain.assign(static_cast<std::size_t>(nvals) + 1, 0);
        used.assign(static_cast<std::size_t>(nvals) + 1, 0);
        for (int i = 0; i < nu.length(); ++i) remain[static_cast<std::size_t>(i + 1)] = nu.at(i);
        grid.assign(static_cast<std::size_t>(s.outer.length()), {});
        for (int i = 0; i < s.outer.length(); ++i)
            grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(s.row_size(i)), 0);
    }

    // Place a value at (i, j); caller guarantees inner_i <= j < outer_i.
    bool fill(int i, int j) {
        int lo = 1, hi = nvals;
        if (j + 1 < shape.outer.at(i))
            hi = std::min(hi, grid[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(j + 1 - shape.inner.at(i))]);
        if (i > 0 && j >= shape.inner.at(i - 1) && j < shape.outer.at(i - 1))
            lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)]
                                  [static_cast<std::size_t>(j - shape.inner.at(i - 1))] + 1);
        for (int v = lo; v <= hi; ++v) {
            if (remain[static_cast<std::size_t>(v)] == 0) continue;
            if (v >= 2 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)])
                continue;  // lattice prefix violated
            --remain[static_cast<std::size_t>(v)];
            ++used[static_cast<std::size_t>(v)];
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - shape.inner.at(i))] = v;
            bool stop;
            if (j - 1 >= shape.inner.at(i)) {
                stop = fill(i, j - 1);
            } else {
                int ni = i + 1;
                while (ni < shape.outer.length() && shape.row_size(ni) == 0) ++ni;
                if (ni >= shape.outer.length()) {
                    ++count;
                    stop = early_exit;
                } else {
                    stop = fill(ni, shape.outer.at(ni) - 1);
                }
            }
            ++remain[static_cast<std::size_t>(v)];
            --used[static_cast<std::size_t>(v)];
            if (stop) return true;
        }
        return false;
    }
};

} // namespace

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("kostka: shapes must have equal weight");
    if (lambda.weight() == 0) return 1;
    if (!dominates(lambda, mu)) return 0;
    KostkaCounter c(lambda, mu);
    c.fill(0, 0);
    return c.count;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu, bool early_exit) {
    if (mu.weight() + nu.weight() != lambda.weight())
        throw std::invalid_argument("lr_coefficient: |mu| + |nu| must equal |lambda|");
    if (!contains(lambda, mu)) return 0;
    if (nu.weight() == 0) return 1;
    SkewShape shape(lambda, mu);
    LrCounter c(shape, nu, early_exit);
    int i = 0;
    while (i < lambda.length() && shape.row_size(i) == 0) ++i;
    c.fill(i, lambda.at(i) - 1);
    return c.count;
}

bool is_horizontal_strip(const SkewShape& s) {
    // column j has boxes in rows { i : inner_i <= j < outer_i }; at most one
    // box per column means inner_i >= outer_{i+1} for consecutive rows
    for (int i = 0; i + 1 < s.outer.length(); ++i)
        if (s.inner.at(i) < s.outer.at(i + 1)) return false;
    return true;
}

bool is_vertical_strip(const SkewShape& s) {
    for (int i = 0; i < s.outer.length(); ++i)
        if (s.row_size(i) > 1) return false;
    return true;
}

std::map<Partition, std::int64_t> young_rule(const Partition& mu) {
    std::map<Partition, std::int64_t> out;
    for (const Partition& lam : partitions_of(mu.weight())) {
        std::int64_t k = kostka(lam, mu);
        if (k > 0) out.emplace(lam, k);
    }
    return out;
}

} // namespace charcover
