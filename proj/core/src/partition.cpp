#include "charcover/partition.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace charcover {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

bool desclex_before(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::mutex g_parts_mutex;
std::unordered_map<int, std::vector<Partition>> g_parts_cache;

} // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::lock_guard<std::mutex> lock(g_parts_mutex);
    auto it = g_parts_cache.find(n);
    if (it == g_parts_cache.end()) {
        std::vector<Partition> out;
        std::vector<int> cur;
        gen_partitions(n, n, cur, out);
        it = g_parts_cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

int partition_index(const Partition& p) {
    const auto& list = partitions_of(p.weight());
    // list is sorted by desclex_before, i.e. by descending part vectors
    auto it = std::lower_bound(list.begin(), list.end(), p, desclex_before);
    if (it == list.end() || !(*it == p))
        throw std::logic_error("partition_index: partition not found");
    return static_cast<int>(it - list.begin());
}

std::size_t partition_count(int n) { return partitions_of(n).size(); }

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> cols(static_cast<std::size_t>(p.at(0)));
    for (int j = 0; j < p.at(0); ++j) {
        int h = 0;
        for (int i = 0; i < p.length(); ++i)
            if (p.at(i) > j) ++h;
        cols[static_cast<std::size_t>(j)] = h;
    }
    return Partition(std::move(cols));
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("dominates: partitions must have equal weight");
    long long sl = 0, sm = 0;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        sl += lambda.at(i);
        sm += mu.at(i);
        if (sm > sl) return false;
    }
    return true;
}

int durfee_rank(const Partition& p) {
    int d = 0;
    while (p.at(d) >= d + 1) ++d;
    return d;
}

int d_stat(const Partition& p, int t) {
    if (t < 1) throw std::invalid_argument("d_stat: t must be >= 1");
    int c = 0;
    for (int i = 0; i < p.length(); ++i)
        if (p.at(i) - p.at(i + 1) >= t) ++c;
    return c;
}

KlStats kl_stats(const Partition& p) {
    KlStats s;
    for (int i = 0; i < p.length(); ++i) {
        if (p.at(i) == p.at(i + 1) && p.at(i + 1) - p.at(i + 2) >= 2) ++s.k;
        if (p.at(i) - p.at(i + 1) == 1 && p.at(i + 1) - p.at(i + 2) >= 1) ++s.l;
    }
    return s;
}

int outside_count(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("outside_count: partitions must have equal weight");
    int c = 0;
    for (int i = 0; i < lambda.length(); ++i)
        c += std::max(lambda.at(i) - mu.at(i), 0);
    return c;
}

Partition hook_partition(int n, int r) {
    if (n < 1 || r < 0 || r > n - 1)
        throw std::invalid_argument("hook_partition: need 0 <= r <= n-1");
    std::vector<int> v;
    v.push_back(n - r);
    v.insert(v.end(), static_cast<std::size_t>(r), 1);
    return Partition(std::move(v));
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

bool has_distinct_odd_parts(const Partition& p) {
    for (int i = 0; i < p.length(); ++i) {
        if (p.at(i) % 2 == 0) return false;
        if (i > 0 && p.at(i - 1) == p.at(i)) return false;
    }
    return true;
}

Partition fold(const Partition& mu) {
    if (!has_distinct_odd_parts(mu))
        throw std::invalid_argument("fold: parts must be distinct and odd");
    // nested principal hooks: the i-th hook (0-based) has arm = leg = (mu_i-1)/2
    // measured from the diagonal box (i, i)
    int k = mu.length();
    std::vector<int> rows(static_cast<std::size_t>(k > 0 ? (mu.at(0) - 1) / 2 + 1 : 0), 0);
    for (int i = 0; i < k; ++i) {
        int arm = (mu.at(i) - 1) / 2;
        // row i spans columns i .. i+arm
        rows[static_cast<std::size_t>(i)] = i + arm + 1;
        // column i spans rows i .. i+arm: extend later rows' lengths
        for (int r = i + 1; r <= i + arm; ++r)
            rows[static_cast<std::size_t>(r)] = std::max(rows[static_cast<std::size_t>(r)], i + 1);
    }
    Partition out(std::move(rows));
    if (!is_self_conjugate(out) || out.weight() != mu.weight())
        throw std::logic_error("fold: result is not self-conjugate");
    return out;
}

Partition unfold(const Partition& lambda) {
    if (!is_self_conjugate(lambda))
        throw std::invalid_argument("unfold: partition must be self-conjugate");
    std::vector<int> hooks;
    Partition lc = conjugate(lambda);
    for (int i = 0; lambda.at(i) > i; ++i)
        hooks.push_back((lambda.at(i) - i) + (lc.at(i) - i) - 1);
    return Partition(std::move(hooks));
}

CycleClassData cycle_class_data(const Partition& mu) {
    CycleClassData d;
    d.mu = mu;
    int n = mu.weight();
    d.z = 1;
    for (int i = 0; i < mu.length();) {
        int j = i;
        while (j < mu.length() && mu.at(j) == mu.at(i)) ++j;
        int mult = j - i;
        for (int t = 0; t < mult; ++t) d.z *= mu.at(i);
        d.z *= factorial(mult);
        i = j;
    }
    d.class_size = factorial(n) / d.z;
    d.sign = ((n - mu.length()) % 2 == 0) ? 1 : -1;
    if (has_distinct_odd_parts(mu)) {
        int s = 0;
        for (int i = 0; i < mu.length(); ++i) s += (mu.at(i) - 1) / 2;
        d.eps = (s % 2 == 0) ? 1 : -1;
    }
    return d;
}

BoxNeighbors box_neighbors(const Partition& p) {
    BoxNeighbors nb;
    for (int i = 0; i < p.length(); ++i) {
        if (p.at(i) > p.at(i + 1)) {  // removable corner in row i
            std::vector<int> v = p.parts();
            v[static_cast<std::size_t>(i)] -= 1;
            nb.removals.insert(Partition(std::move(v)));
        }
    }
    for (int i = 0; i <= p.length(); ++i) {
        if (i == 0 || p.at(i) < p.at(i - 1)) {  // addable position in row i
            std::vector<int> v = p.parts();
            if (i == p.length()) v.push_back(1);
            else v[static_cast<std::size_t>(i)] += 1;
            nb.additions.insert(Partition(std::move(v)));
        }
    }
    for (const Partition& q : nb.removals)
        for (const Partition& r : box_neighbors(q).additions)
            nb.remove_add.insert(r);
    return nb;
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unbalanced '[' in partition");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("empty part in partition");
            auto caret = tok.find('^');
            long part, rep = 1;
            try {
                part = std::stol(tok.substr(0, caret));
                if (caret != std::string::npos) rep = std::stol(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse partition part '" + tok + "'");
            }
            if (part <= 0 || rep <= 0 || rep > 100000)
                throw std::invalid_argument("invalid partition part '" + tok + "'");
            parts.insert(parts.end(), static_cast<std::size_t>(rep), static_cast<int>(part));
        }
    }
    return Partition(std::move(parts));  // validates monotonicity
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.at(i) > outer.at(i)) return false;
    return true;
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!contains(outer, inner))
        throw std::invalid_argument("SkewShape: inner must be contained in outer");
}

int SkewShape::box_count() const { return outer.weight() - inner.weight(); }

} // namespace charcover
