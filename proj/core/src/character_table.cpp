#include "charcover/character_table.hpp"

#include "charcover/tableaux.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

namespace charcover {

using json = nlohmann::json;

ClassFunction ClassFunction::pointwise(const ClassFunction& o) const {
    if (n != o.n) throw std::invalid_argument("pointwise: mismatched n");
    std::vector<BigInt> v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i] * o.values[i];
    return ClassFunction(n, std::move(v));
}

ClassFunction ClassFunction::pointwise_power(int k) const {
    if (k < 1) throw std::invalid_argument("pointwise_power: k must be >= 1");
    ClassFunction r = *this;
    for (int i = 1; i < k; ++i) r = r.pointwise(*this);
    return r;
}

namespace {

std::mutex g_class_data_mutex;
std::unordered_map<int, std::vector<CycleClassData>> g_class_data;

} // namespace

const std::vector<CycleClassData>& class_data_of(int n) {
    std::lock_guard<std::mutex> lock(g_class_data_mutex);
    auto it = g_class_data.find(n);
    if (it == g_class_data.end()) {
        std::vector<CycleClassData> v;
        for (const Partition& mu : partitions_of(n)) v.push_back(cycle_class_data(mu));
        it = g_class_data.emplace(n, std::move(v)).first;
    }
    return it->second;
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

// Border-strip recursion over beta numbers.  `rest` is the weakly
// decreasing list of parts still to remove.
BigInt mn_rec(const Partition& lam, const std::vector<int>& rest, std::size_t k,
              std::unordered_map<std::vector<int>, BigInt, VecHash>* memo) {
    if (k == rest.size()) return lam.empty() ? 1 : 0;

    std::vector<int> key;
    if (memo) {
        key = lam.parts();
        key.push_back(-1);
        key.insert(key.end(), rest.begin() + static_cast<std::ptrdiff_t>(k), rest.end());
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }

    int t = rest[k];
    int l = lam.length();
    std::vector<int> beta(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lam.at(i) + (l - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < l; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        int nb = b - t;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < l; ++j) {
            int x = beta[static_cast<std::size_t>(j)];
            if (x == nb) { clash = true; break; }
            if (x > nb && x < b) ++height;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<std::size_t>(i)] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nparts(nbeta.size());
        for (std::size_t j = 0; j < nbeta.size(); ++j)
            nparts[j] = nbeta[j] - static_cast<int>(nbeta.size() - 1 - j);
        while (!nparts.empty() && nparts.back() == 0) nparts.pop_back();
        Partition nlam(std::move(nparts));
        BigInt sub = mn_rec(nlam, rest, k + 1, memo);
        if (height % 2 == 0) total += sub;
        else total -= sub;
    }

    if (memo) memo->emplace(std::move(key), total);
    return total;
}

std::mutex g_mn_mutex;
std::unordered_map<std::vector<int>, BigInt, VecHash> g_mn_memo;

} // namespace

BigInt mn_value(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("mn_value: partitions must have equal weight");
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    return mn_rec(lambda, mu.parts(), 0, &g_mn_memo);
}

BigInt mn_value_ordered(const Partition& lambda, const std::vector<int>& parts_in_order) {
    int sum = 0;
    for (int p : parts_in_order) {
        if (p <= 0) throw std::invalid_argument("mn_value_ordered: parts must be positive");
        sum += p;
    }
    if (sum != lambda.weight())
        throw std::invalid_argument("mn_value_ordered: parts must sum to |lambda|");
    return mn_rec(lambda, parts_in_order, 0, nullptr);
}

BigInt hook_length_degree(const Partition& lambda) {
    BigInt num = factorial(lambda.weight());
    Partition lc = conjugate(lambda);
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.at(i); ++j)
            den *= (lambda.at(i) - j) + (lc.at(j) - i) - 1;
    return num / den;
}

CharacterTable CharacterTable::build(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    CharacterTable t;
    t.n_ = n;
    t.parts_ = partitions_of(n);
    t.classes_ = class_data_of(n);
    t.identity_class_ = static_cast<int>(t.parts_.size()) - 1;  // (1^n) is desclex-last
    t.chi_.resize(t.parts_.size());
    {
        std::lock_guard<std::mutex> lock(g_mn_mutex);
        for (std::size_t r = 0; r < t.parts_.size(); ++r) {
            t.chi_[r].resize(t.parts_.size());
            for (std::size_t c = 0; c < t.parts_.size(); ++c)
                t.chi_[r][c] = mn_rec(t.parts_[r], t.parts_[c].parts(), 0, &g_mn_memo);
        }
    }
    return t;
}

const BigInt& CharacterTable::degree(int lam) const {
    return chi_[static_cast<std::size_t>(lam)][static_cast<std::size_t>(identity_class_)];
}

int CharacterTable::index_of(const Partition& lam) const {
    if (lam.weight() != n_)
        throw std::invalid_argument("index_of: partition has wrong weight");
    return partition_index(lam);
}

bool CharacterTable::self_check(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::size_t p = parts_.size();
    if (chi_.size() != p) return fail("row count mismatch");
    BigInt nf = factorial(n_);
    for (std::size_t a = 0; a < p; ++a) {
        if (chi_[a].size() != p) return fail("column count mismatch");
        if (chi_[a][static_cast<std::size_t>(identity_class_)] != hook_length_degree(parts_[a]))
            return fail("degree of " + parts_[a].str() + " disagrees with hook length formula");
        for (std::size_t b = a; b < p; ++b) {
            BigInt s = 0;
            for (std::size_t c = 0; c < p; ++c)
                s += classes_[c].class_size * chi_[a][c] * chi_[b][c];
            if (s != (a == b ? nf : BigInt(0)))
                return fail("row orthogonality fails at (" + parts_[a].str() + ", " +
                            parts_[b].str() + ")");
        }
    }
    for (std::size_t a = 0; a < p; ++a) {
        std::size_t ac = static_cast<std::size_t>(partition_index(conjugate(parts_[a])));
        for (std::size_t c = 0; c < p; ++c) {
            BigInt expect = chi_[a][c] * classes_[c].sign;
            if (chi_[ac][c] != expect) return fail("conjugate-sign relation fails");
        }
    }
    return true;
}

std::string CharacterTable::to_cache_json() const {
    json j;
    j["format_version"] = 1;
    j["n"] = n_;
    j["partition_order"] = "desclex";
    json parts = json::array();
    for (const Partition& p : parts_) parts.push_back(p.parts());
    j["partitions"] = std::move(parts);
    json sizes = json::array();
    for (const CycleClassData& c : classes_) sizes.push_back(to_decimal(c.class_size));
    j["class_sizes"] = std::move(sizes);
    json rows = json::array();
    for (const auto& row : chi_) {
        json r = json::array();
        for (const BigInt& v : row) r.push_back(to_decimal(v));
        rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

CharacterTable CharacterTable::from_cache_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("format_version").get<int>() != 1)
        throw std::runtime_error("unsupported cache format version");
    if (j.at("partition_order").get<std::string>() != "desclex")
        throw std::runtime_error("unsupported partition order in cache");
    int n = j.at("n").get<int>();
    CharacterTable t;
    t.n_ = n;
    t.parts_ = partitions_of(n);
    t.classes_ = class_data_of(n);
    t.identity_class_ = static_cast<int>(t.parts_.size()) - 1;
    const json& parts = j.at("partitions");
    if (parts.size() != t.parts_.size()) throw std::runtime_error("partition list mismatch");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].get<std::vector<int>>() != t.parts_[i].parts())
            throw std::runtime_error("partition list mismatch");
    const json& sizes = j.at("class_sizes");
    if (sizes.size() != t.parts_.size()) throw std::runtime_error("class size list mismatch");
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (bigint_from_decimal(sizes[i].get<std::string>()) != t.classes_[i].class_size)
            throw std::runtime_error("class size mismatch");
    const json& rows = j.at("matrix");
    if (rows.size() != t.parts_.size()) throw std::runtime_error("matrix row count mismatch");
    t.chi_.resize(t.parts_.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != t.parts_.size())
            throw std::runtime_error("matrix column count mismatch");
        t.chi_[r].resize(t.parts_.size());
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            t.chi_[r][c] = bigint_from_decimal(rows[r][c].get<std::string>());
    }
    return t;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("inner_product: mismatched n");
    const auto& cls = class_data_of(f.n);
    if (f.values.size() != cls.size() || g.values.size() != cls.size())
        throw std::invalid_argument("inner_product: wrong vector length");
    BigInt s = 0;
    for (std::size_t c = 0; c < cls.size(); ++c)
        s += cls[c].class_size * f.values[c] * g.values[c];
    return Rational(s, factorial(f.n));
}

std::map<Partition, BigInt> decompose(const CharacterTable& table, const ClassFunction& f) {
    if (f.n != table.n()) throw std::invalid_argument("decompose: mismatched n");
    std::map<Partition, BigInt> out;
    BigInt nf = factorial(table.n());
    for (std::size_t r = 0; r < table.size(); ++r) {
        BigInt s = 0;
        const auto& row = table.row(static_cast<int>(r));
        for (std::size_t c = 0; c < table.size(); ++c)
            s += table.classes()[c].class_size * f.values[c] * row[c];
        if (s % nf != 0)
            throw std::domain_error("decompose: non-integral multiplicity at " +
                                    table.irreducibles()[r].str());
        BigInt m = s / nf;
        if (m != 0) out.emplace(table.irreducibles()[r], std::move(m));
    }
    return out;
}

ClassFunction sigma_character(const CharacterTable& table, const Partition& mu) {
    if (mu.weight() != table.n()) throw std::invalid_argument("sigma: wrong weight");
    std::vector<BigInt> v(table.size(), BigInt(0));
    for (const auto& [lam, k] : young_rule(mu)) {
        int r = table.index_of(lam);
        const auto& row = table.row(r);
        for (std::size_t c = 0; c < table.size(); ++c) v[c] += BigInt(k) * row[c];
    }
    return ClassFunction(table.n(), std::move(v));
}

std::map<std::vector<Partition>, BigInt> restrict_to_young(const Partition& lambda,
                                                           const std::vector<int>& composition) {
    int sum = 0;
    for (int c : composition) {
        if (c <= 0) throw std::invalid_argument("restrict_to_young: composition parts must be positive");
        sum += c;
    }
    if (sum != lambda.weight())
        throw std::invalid_argument("restrict_to_young: composition must sum to |lambda|");

    // peel factors from the right by iterated LR coefficients
    std::map<std::vector<Partition>, BigInt> acc;
    acc.emplace(std::vector<Partition>{lambda}, BigInt(1));
    for (std::size_t step = composition.size(); step > 1; --step) {
        int ck = composition[step - 1];
        std::map<std::vector<Partition>, BigInt> next;
        for (const auto& [tuple, mult] : acc) {
            const Partition& head = tuple.front();
            for (const Partition& nu : partitions_of(ck)) {
                for (const Partition& rest : partitions_of(head.weight() - ck)) {
                    std::int64_t c = lr_coefficient(head, rest, nu);
                    if (c == 0) continue;
                    std::vector<Partition> nt;
                    nt.push_back(rest);
                    nt.push_back(nu);
                    nt.insert(nt.end(), tuple.begin() + 1, tuple.end());
                    next[nt] += mult * c;
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

namespace {

std::filesystem::path sym_cache_path(const std::string& dir, int n) {
    return std::filesystem::path(dir) / ("sym_v1_n" + std::to_string(n) + ".json");
}

} // namespace

TableStore::~TableStore() = default;

const CharacterTable& TableStore::sym(int n) {
    if (n < 1 || n > opt_.sym_limit)
        throw LimitError("character table limit exceeded: n=" + std::to_string(n) +
                         " is outside 1.." + std::to_string(opt_.sym_limit));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = sym_.find(n);
    if (it != sym_.end()) return *it->second;

    std::unique_ptr<CharacterTable> table;
    if (opt_.cache_dir) {
        auto path = sym_cache_path(*opt_.cache_dir, n);
        std::ifstream in(path);
        if (in) {  // cache misses are silent
            try {
                std::stringstream ss;
                ss << in.rdbuf();
                auto loaded = std::make_unique<CharacterTable>(
                    CharacterTable::from_cache_json(ss.str()));
                std::string why;
                if (loaded->self_check(&why)) {
                    table = std::move(loaded);
                } else {
                    std::cerr << "warning: cached table " << path.string()
                              << " failed self-check (" << why << "); rebuilding\n";
                }
            } catch (const std::exception& e) {
                std::cerr << "warning: cached table " << path.string() << " unreadable ("
                          << e.what() << "); rebuilding\n";
            }
        }
    }
    if (!table) {
        table = std::make_unique<CharacterTable>(CharacterTable::build(n));
        if (opt_.cache_dir) {
            std::error_code ec;
            std::filesystem::create_directories(*opt_.cache_dir, ec);
            if (!ec) {
                auto path = sym_cache_path(*opt_.cache_dir, n);
                std::ofstream out(path);
                if (out) out << table->to_cache_json();
            }
        }
    }
    auto [pos, ok] = sym_.emplace(n, std::move(table));
    (void)ok;
    return *pos->second;
}

} // namespace charcover
