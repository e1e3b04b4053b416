#include "charcover/covering.hpp"

#include "charcover/kronecker.hpp"
#include "charcover/tableaux.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace charcover {

std::size_t ConstituentSet::count() const {
    std::size_t c = 0;
    for (bool b : bits) c += b ? 1 : 0;
    return c;
}

bool ConstituentSet::is_full() const {
    for (bool b : bits)
        if (!b) return false;
    return true;
}

ConstituentSet& ConstituentSet::unite(const ConstituentSet& o) {
    if (n != o.n) throw std::invalid_argument("ConstituentSet::unite: mismatched n");
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (o.bits[i]) bits[i] = true;
    return *this;
}

bool ConstituentSet::contains_set(const ConstituentSet& o) const {
    if (n != o.n) throw std::invalid_argument("ConstituentSet::contains_set: mismatched n");
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (o.bits[i] && !bits[i]) return false;
    return true;
}

std::vector<Partition> ConstituentSet::members() const {
    std::vector<Partition> out;
    const auto& all = partitions_of(n);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) out.push_back(all[i]);
    return out;
}

ConstituentSet constituents(const CharacterTable& table, const ClassFunction& f) {
    ConstituentSet s = ConstituentSet::empty(table.n());
    for (const auto& [lam, mult] : decompose(table, f)) {
        if (mult < 0)
            throw std::domain_error("constituents: negative multiplicity at " + lam.str());
        s.add(lam);
    }
    return s;
}

ConstituentSet KronSupportCache::product_support(int a, int b) {
    auto key = std::minmax(a, b);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    ClassFunction prod = t_.irreducible(a).pointwise(t_.irreducible(b));
    ConstituentSet s = constituents(t_, prod);
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(s));
    (void)inserted;  // concurrent duplicates compute identical sets
    return it->second;
}

ConstituentSet product_closure_step(KronSupportCache& cache, const ConstituentSet& s,
                                    const Partition& lambda) {
    if (s.n != lambda.weight())
        throw std::invalid_argument("product_closure_step: mismatched n");
    int li = partition_index(lambda);
    ConstituentSet out = ConstituentSet::empty(s.n);
    for (std::size_t i = 0; i < s.bits.size(); ++i)
        if (s.bits[i]) out.unite(cache.product_support(static_cast<int>(i), li));
    return out;
}

CcnResult ccn_char(KronSupportCache& cache, const Partition& lambda, int cap) {
    int n = cache.table().n();
    if (lambda.weight() != n) throw std::invalid_argument("ccn_char: wrong weight");
    if (cap < 0) cap = n;
    if (cap < 1) throw std::invalid_argument("ccn_char: cap must be >= 1");
    CcnResult r;
    if (lambda.length() <= 1 || lambda.at(0) == 1) {  // (n) or (1^n): linear
        r.status = CcnResult::Status::not_covering;
        return r;
    }
    ConstituentSet s = ConstituentSet::single(lambda);
    for (int k = 1; k <= cap; ++k) {
        r.growth.push_back(s.count());
        if (s.is_full()) {
            r.status = CcnResult::Status::found;
            r.value = k;
            return r;
        }
        if (k < cap) s = product_closure_step(cache, s, lambda);
    }
    r.status = CcnResult::Status::cap_exhausted;
    return r;
}

CcnResult ccn_char(const CharacterTable& table, const Partition& lambda, int cap) {
    KronSupportCache cache(table);
    return ccn_char(cache, lambda, cap);
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Entry multisets contributed by rows r.. of a contingency matrix with the
// given sorted remaining column capacities.  Equal capacities are grouped so
// column permutations are never enumerated twice.
struct SuccessorEnumerator {
    const std::vector<int>& rows;
    std::unordered_map<std::vector<int>, std::set<std::vector<int>>, VecHash> memo;

    // key: remaining capacities sorted descending, with the row index appended
    const std::set<std::vector<int>>& suffix_sets(std::size_t r, std::vector<int> caps) {
        std::sort(caps.begin(), caps.end(), std::greater<int>());
        while (!caps.empty() && caps.back() == 0) caps.pop_back();
        std::vector<int> key = caps;
        key.push_back(-1);
        key.push_back(static_cast<int>(r));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::set<std::vector<int>> result;
        if (r == rows.size()) {
            result.insert({});
        } else {
            // group equal capacities
            std::vector<std::pair<int, int>> groups;  // (capacity, count)
            for (int c : caps) {
                if (!groups.empty() && groups.back().first == c) ++groups.back().second;
                else groups.emplace_back(c, 1);
            }
            int target = rows[r];
            std::vector<int> entries;       // nonzero entries of this row
            std::vector<int> newcaps;       // capacities after this row
            std::function<void(std::size_t, int)> assign_group = [&](std::size_t g, int left) {
                if (g == groups.size()) {
                    if (left != 0) return;
                    std::vector<int> caps2 = newcaps;
                    for (const auto& s : suffix_sets(r + 1, std::move(caps2))) {
                        std::vector<int> merged = entries;
                        merged.insert(merged.end(), s.begin(), s.end());
                        std::sort(merged.begin(), merged.end(), std::greater<int>());
                        result.insert(std::move(merged));
                    }
                    return;
                }
                auto [cap, cnt] = groups[g];
                // weakly decreasing tuples (e_1 >= ... >= e_cnt), 0 <= e <= cap
                std::function<void(int, int, int)> tuple = [&](int idx, int maxv, int rem) {
                    if (idx == cnt) {
                        assign_group(g + 1, rem);
                        return;
                    }
                    int hi = std::min(maxv, rem);
                    for (int e = hi; e >= 0; --e) {
                        if (e > 0) entries.push_back(e);
                        newcaps.push_back(cap - e);
                        tuple(idx + 1, e, rem - e);
                        newcaps.pop_back();
                        if (e > 0) entries.pop_back();
                    }
                };
                tuple(0, std::min(cap, left), left);
            };
            assign_group(0, target);
        }
        return memo.emplace(std::move(key), std::move(result)).first->second;
    }
};

} // namespace

std::vector<Partition> sigma_successors(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw std::invalid_argument("sigma_successors: weights differ");
    SuccessorEnumerator en{mu.parts(), {}};
    std::vector<Partition> out;
    for (const auto& mset : en.suffix_sets(0, lambda.parts()))
        out.push_back(Partition(std::vector<int>(mset)));
    return out;
}

CcnResult ccn_sigma(const Partition& lambda, int cap) {
    int n = lambda.weight();
    if (cap < 0) cap = n;
    CcnResult r;
    if (lambda.length() <= 1) {  // sigma_(n) is the trivial character
        r.status = CcnResult::Status::not_covering;
        return r;
    }
    Partition start(std::vector<int>{n});
    Partition target(std::vector<int>(static_cast<std::size_t>(n), 1));
    std::set<Partition> seen{start};
    std::vector<Partition> frontier{start};
    for (int depth = 1; depth <= cap; ++depth) {
        std::set<Partition> next;
        for (const Partition& mu : frontier)
            for (const Partition& s : sigma_successors(mu, lambda))
                if (!seen.count(s)) next.insert(s);
        if (next.count(target)) {
            r.status = CcnResult::Status::found;
            r.value = depth;
            return r;
        }
        if (next.empty()) {
            r.status = CcnResult::Status::not_covering;
            return r;
        }
        frontier.assign(next.begin(), next.end());
        seen.insert(next.begin(), next.end());
    }
    r.status = CcnResult::Status::cap_exhausted;
    return r;
}

namespace {

// Break the tracked part t into (t-1, 1), the k-1 largest other parts l into
// (l-1, 1) (a part equal to 1 moves to the second column), everything else
// into (l, 0).  Column 2 then sums to exactly k.
SplitStep tracked_break(const std::vector<int>& parts, int tracked, int k) {
    SplitStep st;
    st.rows.resize(parts.size());
    int tracked_row = -1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == tracked) { tracked_row = static_cast<int>(i); break; }
    }
    if (tracked_row < 0) throw std::logic_error("tracked part missing from partition");
    st.rows[static_cast<std::size_t>(tracked_row)] = {tracked - 1, 1};
    int breaks = k - 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (static_cast<int>(i) == tracked_row) continue;
        if (breaks > 0) {
            st.rows[i] = {parts[i] - 1, 1};
            --breaks;
        } else {
            st.rows[i] = {parts[i], 0};
        }
    }
    if (breaks != 0) throw std::logic_error("not enough parts to break");
    return st;
}

Partition collapse(const SplitStep& st) {
    std::vector<int> vals;
    for (const auto& row : st.rows) {
        if (row[0] > 0) vals.push_back(row[0]);
        if (row[1] > 0) vals.push_back(row[1]);
    }
    std::sort(vals.begin(), vals.end(), std::greater<int>());
    return Partition(std::move(vals));
}

} // namespace

SplitSequence tworow_split_sequence(int n, int k) {
    if (n < 5) throw std::invalid_argument("tworow_split_sequence: need n >= 5");
    if (k < 1 || k * k > n)
        throw std::invalid_argument("tworow_split_sequence: need 1 <= k <= floor(sqrt(n))");
    int b = (n - 1) / (k + 1);
    int c = (n - 1) % (k + 1);
    int expected_len = (2 * (n - 1) + k) / (k + 1);  // ceil(2(n-1)/(k+1))

    SplitSequence seq;
    seq.generator = Partition(std::vector<int>{n - k, k});
    seq.steps.push_back(Partition(std::vector<int>{n}));

    auto push = [&seq](SplitStep st) {
        seq.steps.push_back(collapse(st));
        seq.matrices.push_back(std::move(st));
    };

    // alpha_i = (n - ik, k^i) for i = 1..b
    for (int i = 1; i <= b; ++i) {
        const auto& prev = seq.steps.back().parts();
        SplitStep st;
        st.rows.push_back({prev[0] - k, k});
        for (std::size_t j = 1; j < prev.size(); ++j) st.rows.push_back({prev[j], 0});
        push(std::move(st));
    }

    int tracked = b + 1;
    if (c > 0) {
        // alpha_{b+1} = (b+1, k^{b-k+c}, (k-1)^{k-c}, c, 1^{k-c})
        const auto& prev = seq.steps.back().parts();  // (b+c+1, k^b)
        SplitStep st;
        st.rows.push_back({b + 1, c});
        int thinned = k - c;
        for (std::size_t j = 1; j < prev.size(); ++j) {
            if (thinned > 0) {
                st.rows.push_back({prev[j] - 1, 1});
                --thinned;
            } else {
                st.rows.push_back({prev[j], 0});
            }
        }
        if (thinned != 0) throw std::logic_error("tworow_split_sequence: b < k - c");
        push(std::move(st));
    }

    Partition target(std::vector<int>(static_cast<std::size_t>(n), 1));
    while (!(seq.steps.back() == target)) {
        if (seq.length() > expected_len)
            throw std::logic_error("tworow_split_sequence: sequence exceeded expected length");
        push(tracked_break(seq.steps.back().parts(), tracked, k));
        if (tracked > 1) --tracked;
    }
    if (seq.length() != expected_len) {
        std::ostringstream os;
        os << "tworow_split_sequence: length " << seq.length() << " != ceil(2(n-1)/(k+1)) = "
           << expected_len << " for n=" << n << ", k=" << k;
        throw std::logic_error(os.str());
    }
    validate_split_sequence(seq);
    return seq;
}

SplitSequence halving_sequence(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("halving_sequence: n must be odd and >= 5");
    int k = (n + 1) / 2;
    int expected_len = 0;
    while ((1 << expected_len) < n) ++expected_len;  // ceil(log2 n)

    SplitSequence seq;
    seq.generator = Partition(std::vector<int>{k, k - 1});
    seq.steps.push_back(Partition(std::vector<int>{n}));
    Partition target(std::vector<int>(static_cast<std::size_t>(n), 1));

    while (!(seq.steps.back() == target)) {
        const auto& parts = seq.steps.back().parts();
        int s = static_cast<int>(parts.size());
        // col-1 sum with rows >= x reversed; pick the earliest balancing x
        int chosen = -1;
        for (int x = 1; x <= s + 1; ++x) {
            long long col1 = 0;
            for (int i = 0; i < s; ++i) {
                int a = parts[static_cast<std::size_t>(i)];
                col1 += (i + 1 < x) ? (a + 1) / 2 : a / 2;
            }
            if (col1 == k) { chosen = x; break; }
        }
        if (chosen < 0)
            throw std::logic_error("halving_sequence: no switch index balances the columns at " +
                                   seq.steps.back().str());
        SplitStep st;
        for (int i = 0; i < s; ++i) {
            int a = parts[static_cast<std::size_t>(i)];
            int hi = (a + 1) / 2, lo = a / 2;
            if (i + 1 < chosen) st.rows.push_back({hi, lo});
            else st.rows.push_back({lo, hi});
        }
        seq.steps.push_back(collapse(st));
        seq.matrices.push_back(std::move(st));
        if (seq.length() > expected_len)
            throw std::logic_error("halving_sequence: exceeded ceil(log2 n) steps");
    }
    if (seq.length() != expected_len)
        throw std::logic_error("halving_sequence: length != ceil(log2 n)");
    validate_split_sequence(seq);
    return seq;
}

void validate_split_sequence(const SplitSequence& s) {
    if (s.steps.empty() || s.matrices.size() + 1 != s.steps.size())
        throw std::logic_error("split sequence: step/matrix count mismatch");
    int n = s.steps.front().weight();
    if (!(s.steps.front() == Partition(std::vector<int>{n})))
        throw std::logic_error("split sequence: must start at (n)");
    if (s.generator.length() != 2)
        throw std::logic_error("split sequence: generator must be a two-row partition");
    for (std::size_t i = 0; i < s.matrices.size(); ++i) {
        const auto& prev = s.steps[i].parts();
        const auto& st = s.matrices[i];
        if (st.rows.size() != prev.size())
            throw std::logic_error("split sequence: matrix row count mismatch at step " +
                                   std::to_string(i));
        long long c0 = 0, c1 = 0;
        for (std::size_t r = 0; r < st.rows.size(); ++r) {
            if (st.rows[r][0] < 0 || st.rows[r][1] < 0)
                throw std::logic_error("split sequence: negative matrix entry");
            if (st.rows[r][0] + st.rows[r][1] != prev[r])
                throw std::logic_error("split sequence: row sum mismatch at step " +
                                       std::to_string(i));
            c0 += st.rows[r][0];
            c1 += st.rows[r][1];
        }
        if (c0 != s.generator.at(0) || c1 != s.generator.at(1))
            throw std::logic_error("split sequence: column sums differ from generator at step " +
                                   std::to_string(i));
        if (!(collapse(st) == s.steps[i + 1]))
            throw std::logic_error("split sequence: collapsed entries differ at step " +
                                   std::to_string(i));
    }
    Partition target(std::vector<int>(static_cast<std::size_t>(n), 1));
    if (!(s.steps.back() == target))
        throw std::logic_error("split sequence: must end at (1^n)");
}

ConstituentSet hook_power_constituents(const Partition& lambda, int k, int r) {
    int n = lambda.weight();
    if (k < 1 || k > n - 2)
        throw std::invalid_argument("hook_power_constituents: need 1 <= k <= n-2");
    if (r < 1) throw std::invalid_argument("hook_power_constituents: need r >= 1");
    ConstituentSet s = ConstituentSet::empty(n);
    const auto& all = partitions_of(n);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (outside_count(lambda, all[i]) <= k * r) s.add(static_cast<int>(i));
    return s;
}

bool product_of_hooks_covers(KronSupportCache& cache) {
    int n = cache.table().n();
    if (n < 5) throw std::invalid_argument("product_of_hooks_covers: need n >= 5");
    ConstituentSet s = ConstituentSet::single(hook_partition(n, 1));
    for (int k = 2; k <= n - 2; ++k) s = product_closure_step(cache, s, hook_partition(n, k));
    return s.is_full();
}

ConjectureReport conjecture_status(KronSupportCache& cache) {
    const CharacterTable& t = cache.table();
    int n = t.n();
    if (n < 5) throw std::invalid_argument("conjecture_status: need n >= 5");
    ConjectureReport rep;
    rep.n = n;
    while ((1 << rep.log_bound) < n) ++rep.log_bound;

    auto chi_power_support = [&](const Partition& lam, int i) {
        ConstituentSet s = ConstituentSet::single(lam);
        for (int j = 1; j < i; ++j) s = product_closure_step(cache, s, lam);
        return s;
    };
    auto sigma_power_support = [&](const Partition& lam, int i) {
        ClassFunction f = sigma_character(t, lam).pointwise_power(i);
        return constituents(t, f);
    };

    for (int k = 1; k <= n / 2; ++k) {
        Partition lam(std::vector<int>{n - k, k});
        if (n % 2 == 0 && k == n / 2) continue;  // part (3) below
        int power;
        if (n % 2 == 1) power = 2;
        else power = (k < (n + 3) / 4) ? 2 : 3;  // ceil(n/4) = (n+3)/4
        ConjectureCase cs;
        cs.lambda = lam;
        cs.power = power;
        cs.equal = chi_power_support(lam, power) == sigma_power_support(lam, power);
        if (!cs.equal) rep.counterexample_found = true;
        rep.cases.push_back(std::move(cs));
    }
    if (n % 2 == 0) {
        Partition lam(std::vector<int>{n / 2, n / 2});
        CcnResult r = ccn_char(cache, lam, n);
        if (r.found()) {
            rep.half_rect_ccn = r.value;
            rep.half_rect_in_bracket =
                (r.value >= rep.log_bound && r.value <= rep.log_bound + 1);
            if (!rep.half_rect_in_bracket) rep.counterexample_found = true;
        }
    }
    return rep;
}

} // namespace charcover
