#include "charcover/alternating.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace charcover {

using json = nlohmann::json;

Surd Surd::operator*(const Surd& o) const {
    if (is_rational()) return Surd(a * o.a, a * o.b, o.disc);
    if (o.is_rational()) return Surd(a * o.a, b * o.a, disc);
    if (disc != o.disc)
        throw std::logic_error("Surd: cannot multiply values with different discriminants");
    return Surd(a * o.a + b * o.b * disc, a * o.b + b * o.a, disc);
}

Surd Surd::operator+(const Surd& o) const {
    if (is_rational()) return Surd(a + o.a, o.b, o.disc);
    if (o.is_rational()) return Surd(a + o.a, b, disc);
    if (disc != o.disc)
        throw std::logic_error("Surd: cannot add values with different discriminants");
    return Surd(a + o.a, b + o.b, disc);
}

std::string Surd::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << a;
    } else {
        os << a << (b > 0 ? "+" : "") << b << "*sqrt(" << disc << ")";
    }
    return os.str();
}

std::string AltIrrLabel::str() const {
    switch (kind) {
        case Kind::Pair: return lam.str() + "|restriction";
        case Kind::SplitPlus: return lam.str() + "+";
        case Kind::SplitMinus: return lam.str() + "-";
    }
    return {};
}

std::vector<AltClass> an_classes(int n) {
    if (n < 2) throw std::invalid_argument("an_classes: need n >= 2");
    std::vector<AltClass> out;
    for (const CycleClassData& cd : class_data_of(n)) {
        if (cd.sign != 1) continue;
        if (cd.eps.has_value()) {  // distinct odd parts: the class splits
            AltClass half;
            half.mu = cd.mu;
            half.size = cd.class_size / 2;
            half.eps = *cd.eps;
            half.disc = (static_cast<long long>(*cd.eps)) *
                        static_cast<long long>(cd.z.convert_to<long long>());
            half.split = +1;
            out.push_back(half);
            half.split = -1;
            out.push_back(half);
        } else {
            AltClass c;
            c.mu = cd.mu;
            c.split = 0;
            c.size = cd.class_size;
            out.push_back(c);
        }
    }
    return out;
}

AltTable AltTable::build(const CharacterTable& sym, Orientation orient) {
    AltTable t;
    t.n_ = sym.n();
    t.order_ = factorial(t.n_) / 2;
    t.classes_ = an_classes(t.n_);
    t.identity_class_ = -1;
    for (std::size_t c = 0; c < t.classes_.size(); ++c)
        if (t.classes_[c].mu.at(0) == 1 || t.classes_[c].mu.empty()) t.identity_class_ = static_cast<int>(c);
    if (t.n_ == 1) t.identity_class_ = 0;

    for (const Partition& lam : sym.irreducibles()) {
        Partition lc = conjugate(lam);
        if (lam == lc) {
            t.labels_.push_back({AltIrrLabel::Kind::SplitPlus, lam});
            t.labels_.push_back({AltIrrLabel::Kind::SplitMinus, lam});
        } else if (desclex_before(lam, lc)) {
            t.labels_.push_back({AltIrrLabel::Kind::Pair, lam});
        }
    }

    int flip = (orient == Orientation::swapped) ? -1 : 1;
    for (const AltIrrLabel& label : t.labels_) {
        int r = sym.index_of(label.lam);
        std::vector<Surd> row;
        row.reserve(t.classes_.size());
        if (label.kind == AltIrrLabel::Kind::Pair) {
            for (const AltClass& c : t.classes_)
                row.push_back(Surd(Rational(sym.value(r, partition_index(c.mu)))));
        } else {
            Partition mu0 = unfold(label.lam);
            int pm = (label.kind == AltIrrLabel::Kind::SplitPlus) ? 1 : -1;
            for (const AltClass& c : t.classes_) {
                if (c.split != 0 && c.mu == mu0) {
                    // chi^{pm}(w^{+}) = (eps + pm sqrt(eps z))/2,
                    // chi^{pm}(w^{-}) = (eps - pm sqrt(eps z))/2
                    Rational bcoef(pm * c.split * flip, 2);
                    row.push_back(Surd(Rational(c.eps, 2), bcoef, c.disc));
                } else {
                    BigInt v = sym.value(r, partition_index(c.mu));
                    row.push_back(Surd(Rational(v, 2)));
                }
            }
        }
        t.values_.push_back(std::move(row));
    }
    return t;
}

int AltTable::index_of(const AltIrrLabel& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("AltTable::index_of: no such label " + label.str());
}

AltIrrLabel AltTable::label_for(const Partition& lam, int branch) const {
    if (lam.weight() != n_) throw std::invalid_argument("label_for: wrong weight");
    Partition lc = conjugate(lam);
    if (lam == lc)
        return {branch >= 0 ? AltIrrLabel::Kind::SplitPlus : AltIrrLabel::Kind::SplitMinus, lam};
    return {AltIrrLabel::Kind::Pair, desclex_before(lam, lc) ? lam : lc};
}

BigInt AltTable::degree(int row) const {
    const Surd& v = values_[static_cast<std::size_t>(row)][static_cast<std::size_t>(identity_class_)];
    if (!v.is_rational() || denominator(v.a) != 1)
        throw std::logic_error("AltTable::degree: non-integral degree");
    return numerator(v.a);
}

std::vector<Surd> AltTable::product_row(int i, int j) const {
    const auto& a = row(i);
    const auto& b = row(j);
    std::vector<Surd> out(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] * b[c];
    return out;
}

Rational AltTable::hermitian_inner(const std::vector<Surd>& f, const std::vector<Surd>& g) const {
    if (f.size() != classes_.size() || g.size() != classes_.size())
        throw std::invalid_argument("hermitian_inner: wrong vector length");
    Rational total = 0;
    std::map<Partition, Rational> surd_by_mu;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        Surd prod = f[c] * g[c].conj();
        total += Rational(classes_[c].size) * prod.a;
        if (!prod.is_rational()) surd_by_mu[classes_[c].mu] += Rational(classes_[c].size) * prod.b;
    }
    for (const auto& [mu, coef] : surd_by_mu)
        if (coef != 0)
            throw std::logic_error("hermitian_inner: surd parts do not cancel on class " + mu.str());
    return total / Rational(order_);
}

std::map<AltIrrLabel, BigInt> AltTable::decompose_values(const std::vector<Surd>& f) const {
    std::map<AltIrrLabel, BigInt> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        Rational m = hermitian_inner(f, row(static_cast<int>(i)));
        if (denominator(m) != 1)
            throw std::domain_error("an decomposition: non-integral multiplicity at " +
                                    labels_[i].str());
        if (numerator(m) < 0)
            throw std::domain_error("an decomposition: negative multiplicity at " +
                                    labels_[i].str());
        if (numerator(m) != 0) out.emplace(labels_[i], numerator(m));
    }
    return out;
}

bool AltTable::self_check(std::string* why) const {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    BigInt sizes = 0;
    for (const AltClass& c : classes_) sizes += c.size;
    if (sizes != order_) return fail("class sizes do not sum to |A_n|");
    BigInt degsq = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        BigInt d = degree(static_cast<int>(i));
        degsq += d * d;
    }
    if (degsq != order_) return fail("degree squares do not sum to |A_n|");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i; j < labels_.size(); ++j) {
            Rational m = hermitian_inner(row(static_cast<int>(i)), row(static_cast<int>(j)));
            if (m != Rational(i == j ? 1 : 0))
                return fail("row orthogonality fails at (" + labels_[i].str() + ", " +
                            labels_[j].str() + ")");
        }
    return true;
}

std::string AltTable::to_cache_json() const {
    json j;
    j["format_version"] = 1;
    j["n"] = n_;
    j["group"] = "alt";
    j["partition_order"] = "desclex";
    json cls = json::array();
    for (const AltClass& c : classes_) {
        json e;
        e["mu"] = c.mu.parts();
        e["split"] = c.split;
        e["size"] = to_decimal(c.size);
        if (c.split != 0) e["disc"] = c.disc;
        cls.push_back(std::move(e));
    }
    j["classes"] = std::move(cls);
    json labs = json::array();
    for (const AltIrrLabel& l : labels_) {
        json e;
        e["lam"] = l.lam.parts();
        e["kind"] = l.kind == AltIrrLabel::Kind::Pair
                        ? "pair"
                        : (l.kind == AltIrrLabel::Kind::SplitPlus ? "plus" : "minus");
        labs.push_back(std::move(e));
    }
    j["labels"] = std::move(labs);
    json rows = json::array();
    for (const auto& r : values_) {
        json rr = json::array();
        for (const Surd& v : r) {
            json trip = json::array();
            std::ostringstream a, b;
            a << v.a;
            b << v.b;
            trip.push_back(a.str());
            trip.push_back(b.str());
            trip.push_back(std::to_string(v.disc));
            rr.push_back(std::move(trip));
        }
        rows.push_back(std::move(rr));
    }
    j["matrix"] = std::move(rows);
    return j.dump();
}

std::map<AltIrrLabel, BigInt> an_kron_decompose(const AltTable& t, const AltIrrLabel& x,
                                                const AltIrrLabel& y) {
    return t.decompose_values(t.product_row(t.index_of(x), t.index_of(y)));
}

AltConstituentSet AltSupportCache::product_support(int a, int b) {
    auto key = std::minmax(a, b);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    AltConstituentSet s = AltConstituentSet::empty(t_.size());
    for (const auto& [label, mult] : t_.decompose_values(t_.product_row(a, b)))
        s.add(static_cast<std::size_t>(t_.index_of(label)));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(s));
    (void)inserted;
    return it->second;
}

CcnResult ccn_an(AltSupportCache& cache, const AltIrrLabel& x, int cap) {
    const AltTable& t = cache.table();
    if (cap < 0) cap = t.n();
    CcnResult r;
    int xi = t.index_of(x);
    if (t.degree(xi) == 1) {  // the trivial label never covers
        r.status = CcnResult::Status::not_covering;
        return r;
    }
    AltConstituentSet s = AltConstituentSet::empty(t.size());
    s.add(static_cast<std::size_t>(xi));
    for (int k = 1; k <= cap; ++k) {
        r.growth.push_back(static_cast<std::size_t>(s.count));
        if (s.is_full()) {
            r.status = CcnResult::Status::found;
            r.value = k;
            return r;
        }
        if (k < cap) {
            AltConstituentSet next = AltConstituentSet::empty(t.size());
            for (std::size_t i = 0; i < s.bits.size(); ++i)
                if (s.bits[i]) {
                    AltConstituentSet sup = cache.product_support(static_cast<int>(i), xi);
                    for (std::size_t j = 0; j < sup.bits.size(); ++j)
                        if (sup.bits[j]) next.add(j);
                }
            s = std::move(next);
        }
    }
    r.status = CcnResult::Status::cap_exhausted;
    return r;
}

bool alt_split_products_agree(const AltTable& t) {
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (t.labels()[a].kind != AltIrrLabel::Kind::Pair) continue;
        for (std::size_t b = 0; b < t.size(); ++b) {
            if (t.labels()[b].kind != AltIrrLabel::Kind::SplitPlus) continue;
            AltIrrLabel minus{AltIrrLabel::Kind::SplitMinus, t.labels()[b].lam};
            auto dp = an_kron_decompose(t, t.labels()[a], t.labels()[b]);
            auto dm = an_kron_decompose(t, t.labels()[a], minus);
            auto strip = [&](std::map<AltIrrLabel, BigInt> m) {
                m.erase(t.labels()[b]);
                m.erase(minus);
                std::vector<AltIrrLabel> keys;
                for (const auto& [k, v] : m) keys.push_back(k);
                return keys;
            };
            if (strip(dp) != strip(dm)) return false;
        }
    }
    return true;
}

const AltTable& TableStore::alt(int n) {
    if (n < 2 || n > opt_.alt_limit)
        throw LimitError("alternating table limit exceeded: n=" + std::to_string(n) +
                         " is outside 2.." + std::to_string(opt_.alt_limit));
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = alt_.find(n);
    if (it != alt_.end()) return *it->second;
    // built from the S_n table; the S_n table may itself come from disk
    const CharacterTable* base;
    {
        // sym() has its own locking; release ours to avoid self-deadlock
        mutex_.unlock();
        try {
            base = &sym(n);
        } catch (...) {
            mutex_.lock();
            throw;
        }
        mutex_.lock();
    }
    auto again = alt_.find(n);
    if (again != alt_.end()) return *again->second;
    auto built = std::make_shared<AltTable>(AltTable::build(*base));
    auto [pos, ok] = alt_.emplace(n, std::move(built));
    (void)ok;
    return *pos->second;
}

} // namespace charcover
