#include "cqsym/qsym.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cqsym {

namespace {

int key_ambient(int degree) { return std::max(degree - 1, 0); }

void check_key(int degree, const Subset& J) {
    if (J.n != key_ambient(degree))
        throw std::invalid_argument("QSym key has wrong ambient size");
}

}  // namespace

QSym QSym::one() {
    QSym f{0, {}};
    f.coeffs[Subset::empty(0)] = 1;
    return f;
}

Rat QSym::coeff(const Subset& J) const {
    auto it = coeffs.find(J);
    return it == coeffs.end() ? Rat(0) : it->second;
}

void QSym::add_term(const Subset& J, const Rat& c) {
    check_key(degree, J);
    auto it = coeffs.find(J);
    if (it == coeffs.end()) {
        if (c != 0) coeffs.emplace(J, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

QSym& QSym::operator+=(const QSym& o) {
    if (degree != o.degree && !o.is_zero() && !is_zero())
        throw std::invalid_argument("adding QSym of different degrees");
    if (is_zero()) degree = o.degree;
    for (const auto& [J, c] : o.coeffs) add_term(J, c);
    return *this;
}

QSym& QSym::operator-=(const QSym& o) {
    if (degree != o.degree && !o.is_zero() && !is_zero())
        throw std::invalid_argument("subtracting QSym of different degrees");
    if (is_zero()) degree = o.degree;
    for (const auto& [J, c] : o.coeffs) add_term(J, -c);
    return *this;
}

QSym& QSym::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [J, v] : coeffs) v *= c;
    return *this;
}

QSym operator+(QSym a, const QSym& b) { return a += b; }
QSym operator-(QSym a, const QSym& b) { return a -= b; }
QSym operator*(const Rat& c, QSym a) { return a *= c; }

QSym qsym_monomial(int n, const Subset& J) {
    check_key(n, J);
    QSym f = QSym::zero(n);
    f.coeffs[J] = 1;
    return f;
}

QSym qsym_fundamental(int n, const Subset& J) {
    check_key(n, J);
    QSym f = QSym::zero(n);
    // F_{n,J} = Σ_{K ⊇ J} M_{n,K}: extend J by any subset of its complement.
    std::vector<int> rest;
    for (int x = 1; x <= key_ambient(n); ++x)
        if (!J.contains(x)) rest.push_back(x);
    std::size_t m = rest.size();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        std::vector<int> k = J.elems;
        for (std::size_t i = 0; i < m; ++i)
            if (b & (std::uint64_t{1} << i)) k.push_back(rest[i]);
        std::sort(k.begin(), k.end());
        f.coeffs[Subset(key_ambient(n), std::move(k))] = 1;
    }
    return f;
}

QSym qsym_h(int n) { return qsym_fundamental(n, Subset::empty(key_ambient(n))); }

QSym qsym_e(int n) {
    return qsym_fundamental(n, Subset::full(key_ambient(n)));
}

QSym qsym_h(const Composition& alpha) {
    QSym f = QSym::one();
    for (int p : alpha.parts) f = multiply(f, qsym_h(p));
    return f;
}

std::map<Subset, Rat> to_fundamental(const QSym& f) {
    // c^F_K = Σ_{L ⊆ K} (-1)^{#(K∖L)} c^M_L
    std::map<Subset, Rat> out;
    int amb = key_ambient(f.degree);
    for (const auto& [L, c] : f.coeffs) {
        std::vector<int> rest;
        for (int x = 1; x <= amb; ++x)
            if (!L.contains(x)) rest.push_back(x);
        std::size_t m = rest.size();
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
            std::vector<int> k = L.elems;
            int extra = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (b & (std::uint64_t{1} << i)) {
                    k.push_back(rest[i]);
                    ++extra;
                }
            std::sort(k.begin(), k.end());
            Subset K(amb, std::move(k));
            Rat term = (extra % 2 == 0) ? c : -c;
            auto it = out.find(K);
            if (it == out.end()) {
                if (term != 0) out.emplace(std::move(K), term);
            } else {
                it->second += term;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

QSym from_fundamental(int n, const std::map<Subset, Rat>& fcoeffs) {
    QSym f = QSym::zero(n);
    for (const auto& [J, c] : fcoeffs) {
        QSym fj = qsym_fundamental(n, J);
        fj *= c;
        f += fj;
    }
    return f;
}

QSym qsym_omega(const QSym& f) {
    QSym out = QSym::zero(f.degree);
    for (const auto& [J, c] : to_fundamental(f)) {
        QSym fj = qsym_fundamental(f.degree, J.complement());
        fj *= c;
        out += fj;
    }
    return out;
}

namespace {

void qshuffle_rec(const std::vector<int>& a, std::size_t i, const std::vector<int>& b,
                  std::size_t j, std::vector<int>& cur,
                  std::map<Composition, long long>& out) {
    if (i == a.size() && j == b.size()) {
        ++out[Composition(cur)];
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        qshuffle_rec(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        qshuffle_rec(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        qshuffle_rec(a, i + 1, b, j + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::map<Composition, long long> quasi_shuffle(const Composition& a, const Composition& b) {
    std::map<Composition, long long> out;
    std::vector<int> cur;
    qshuffle_rec(a.parts, 0, b.parts, 0, cur, out);
    return out;
}

QSym multiply(const QSym& f, const QSym& g) {
    if (f.is_zero() || g.is_zero()) return QSym::zero(f.degree + g.degree);
    int n = f.degree + g.degree;
    QSym out = QSym::zero(n);
    for (const auto& [J, cf] : f.coeffs) {
        Composition alpha = co(J, f.degree);
        for (const auto& [K, cg] : g.coeffs) {
            Composition beta = co(K, g.degree);
            Rat c = cf * cg;
            for (const auto& [gamma, mult] : quasi_shuffle(alpha, beta))
                out.add_term(descents_of_composition(gamma), Rat(static_cast<long>(mult)) * c);
        }
    }
    return out;
}

void TruncPoly::add_term(const std::vector<int>& e, const Rat& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

TruncPoly expand_truncated(const QSym& f, int k) {
    if (k < 1) throw std::invalid_argument("expand_truncated needs k >= 1");
    TruncPoly p;
    p.k = k;
    for (const auto& [J, c] : f.coeffs) {
        if (f.degree == 0) {
            p.add_term(std::vector<int>(k, 0), c);
            continue;
        }
        Composition alpha = co(J, f.degree);
        int t = alpha.length();
        if (t > k) continue;
        // all increasing index tuples i_1 < ... < i_t in [k]
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            std::vector<int> e(k, 0);
            for (int i = 0; i < t; ++i) e[idx[i]] = alpha.parts[i];
            p.add_term(e, c);
            int i = t - 1;
            while (i >= 0 && idx[i] == k - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return p;
}

TruncPoly tp_mul(const TruncPoly& a, const TruncPoly& b) {
    if (a.k != b.k) throw std::invalid_argument("TruncPoly variable count mismatch");
    TruncPoly p;
    p.k = a.k;
    std::vector<int> e(a.k);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.k; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

TruncPoly tp_add(const TruncPoly& a, const TruncPoly& b) {
    if (a.k != b.k) throw std::invalid_argument("TruncPoly variable count mismatch");
    TruncPoly p = a;
    for (const auto& [e, c] : b.terms) p.add_term(e, c);
    return p;
}

TruncPoly qsym_eval_on_monomials(const QSym& f, const std::vector<std::vector<int>>& values,
                                 int base_vars) {
    TruncPoly p;
    p.k = base_vars;
    int nv = static_cast<int>(values.size());
    for (const auto& [J, c] : f.coeffs) {
        if (f.degree == 0) {
            p.add_term(std::vector<int>(base_vars, 0), c);
            continue;
        }
        Composition alpha = co(J, f.degree);
        int t = alpha.length();
        if (t > nv) continue;
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            std::vector<int> e(base_vars, 0);
            for (int i = 0; i < t; ++i)
                for (int v = 0; v < base_vars; ++v) e[v] += alpha.parts[i] * values[idx[i]][v];
            p.add_term(e, c);
            int i = t - 1;
            while (i >= 0 && idx[i] == nv - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return p;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::total() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts.empty()) return Partition();
    for (int col = 1; col <= parts[0]; ++col) {
        int count = 0;
        for (int p : parts)
            if (p >= col) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

bool Partition::is_hook() const {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > 1) return false;
    return true;
}

namespace {

void partitions_rec(int remaining, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;  // already lexicographically descending
}

Partition sort_to_partition(const Composition& c) {
    std::vector<int> p = c.parts;
    std::sort(p.rbegin(), p.rend());
    return Partition(std::move(p));
}

bool is_symmetric(const QSym& f) {
    std::set<Partition> seen;
    for (const auto& [J, c] : f.coeffs) {
        Partition lam = sort_to_partition(co(J, f.degree));
        if (!seen.insert(lam).second) continue;
        // coefficients must agree over all rearrangements of lam
        std::vector<int> perm = lam.parts;
        std::sort(perm.begin(), perm.end());
        Rat ref;
        bool first = true;
        do {
            Rat v = f.coeff(descents_of_composition(Composition(perm)));
            if (first) {
                ref = v;
                first = false;
            } else if (v != ref)
                return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

Rat inner_h(const QSym& f, const Partition& lambda) {
    if (lambda.total() != f.degree)
        throw std::invalid_argument("inner_h degree mismatch");
    if (!is_symmetric(f)) throw std::domain_error("inner_h requires a symmetric function");
    return coeff_at_composition(f, Composition(lambda.parts));
}

Rat coeff_at_composition(const QSym& f, const Composition& alpha) {
    if (alpha.total() != f.degree)
        throw std::invalid_argument("composition total does not match degree");
    return f.coeff(descents_of_composition(alpha));
}

}  // namespace cqsym
