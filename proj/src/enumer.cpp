#include "cqsym/enumer.hpp"

#include <stdexcept>

#include "cqsym/cqsym.hpp"

namespace cqsym {

QPoly QPoly::one(int R) {
    QPoly p = zero(R);
    p.coeff[0] = 1;
    return p;
}

QPoly QPoly::q_power(int R, int k) {
    QPoly p = zero(R);
    if (k <= R) p.coeff[k] = 1;
    return p;
}

namespace {

void check_trunc(const QPoly& a, const QPoly& b) {
    if (a.trunc != b.trunc) throw std::invalid_argument("QPoly truncation mismatch");
}

}  // namespace

QPoly qp_add(const QPoly& a, const QPoly& b) {
    check_trunc(a, b);
    QPoly p = a;
    for (int r = 0; r <= a.trunc; ++r) p.coeff[r] += b.coeff[r];
    return p;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) {
    check_trunc(a, b);
    QPoly p = a;
    for (int r = 0; r <= a.trunc; ++r) p.coeff[r] -= b.coeff[r];
    return p;
}

QPoly qp_scale(const Rat& c, QPoly a) {
    for (Rat& x : a.coeff) x *= c;
    return a;
}

QPoly odot(const QPoly& a, const QPoly& b) {
    check_trunc(a, b);
    QPoly p = QPoly::zero(a.trunc);
    for (int i = 0; i <= a.trunc; ++i) {
        if (a.coeff[i] == 0) continue;
        for (int j = 0; j <= b.trunc; ++j) {
            if (b.coeff[j] == 0) continue;
            p.coeff[std::max(i, j)] += a.coeff[i] * b.coeff[j];
        }
    }
    return p;
}

QPoly ordinary_mul(const QPoly& a, const QPoly& b) {
    check_trunc(a, b);
    QPoly p = QPoly::zero(a.trunc);
    for (int i = 0; i <= a.trunc; ++i) {
        if (a.coeff[i] == 0) continue;
        for (int j = 0; i + j <= a.trunc; ++j) p.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
    return p;
}

QPoly ordinary_pow(const QPoly& a, int e) {
    QPoly p = QPoly::one(a.trunc);
    for (int i = 0; i < e; ++i) p = ordinary_mul(p, a);
    return p;
}

QPoly geometric_q(int R) {
    QPoly p = QPoly::zero(R);
    for (int r = 1; r <= R; ++r) p.coeff[r] = 1;
    return p;
}

QPoly one_minus_q(int R) {
    QPoly p = QPoly::one(R);
    if (R >= 1) p.coeff[1] = -1;
    return p;
}

QPoly psi(const QSym& f, int R) {
    if (R < 0) throw std::invalid_argument("negative truncation");
    QPoly out = QPoly::zero(R);
    if (f.degree == 0) {
        for (const auto& [J, c] : f.coeffs) out.coeff[0] += c;
        return out;
    }
    QPoly base = geometric_q(R);
    std::vector<QPoly> pow{QPoly::one(R)};
    for (const auto& [J, c] : f.coeffs) {
        int e = J.size() + 1;
        while (static_cast<int>(pow.size()) <= e) pow.push_back(ordinary_mul(pow.back(), base));
        out = qp_add(out, qp_scale(c, pow[e]));
    }
    return out;
}

QPoly psi_via_truncation(const QSym& f, int R) {
    if (R < 1) throw std::invalid_argument("psi_via_truncation needs R >= 1");
    QPoly out = QPoly::zero(R);
    for (const auto& [e, c] : expand_truncated(f, R).terms) {
        int top = 0;
        for (int i = 0; i < R; ++i)
            if (e[i] > 0) top = i + 1;
        out.coeff[top] += c;
    }
    return out;
}

std::vector<long long> des_shuffle_dist(int m, int n, int i, int j) {
    if (m < 1 || n < 1 || i < 0 || i > m - 1 || j < 0 || j > n - 1)
        throw std::invalid_argument("unrealizable descent data");
    std::vector<long long> out(m + n + 1, 0);
    for (int k = 0; k <= m + n; ++k)
        out[k] = binomial(m + j - i, k - i) * binomial(n + i - j, k - j);
    return out;
}

std::vector<long long> cdes_shuffle_dist(int m, int n, int i, int j) {
    bool oki = (m >= 2 && i >= 1 && i <= m - 1) || (m == 1 && i == 0);
    bool okj = (n >= 2 && j >= 1 && j <= n - 1) || (n == 1 && j == 0);
    if (!oki || !okj) throw std::invalid_argument("unrealizable cyclic descent data");
    std::vector<long long> out(m + n + 1, 0);
    for (int k = 0; k <= m + n; ++k) {
        long long two = static_cast<long long>(k) * binomial(m + j - i - 1, k - i) *
                            binomial(n + i - j - 1, k - j) +
                        static_cast<long long>(m + n - k) * binomial(m + j - i - 1, k - i - 1) *
                            binomial(n + i - j - 1, k - j - 1);
        Rat frac = Rat(static_cast<long>(k) * (m - i) * (n - j) +
                       static_cast<long>(m + n - k) * i * j) /
                   Rat(static_cast<long>(m + j - i) * (n + i - j));
        Rat single = frac * Rat(static_cast<long>(binomial(m + j - i, k - i) *
                                                  binomial(n + i - j, k - j)));
        if (!is_integer(single) || to_long(single) != two)
            throw std::logic_error("the two closed forms disagree");
        out[k] = two;
    }
    return out;
}

std::vector<long long> des_shuffle_brute(const Word& u, const Word& v) {
    std::vector<long long> out(u.size() + v.size() + 1, 0);
    for (const Word& w : shuffles(u, v)) ++out[des_set(w).size()];
    return out;
}

std::vector<long long> cdes_shuffle_brute(const Word& u, const Word& v) {
    std::vector<long long> out(u.size() + v.size() + 1, 0);
    for (const CyclicWord& w : cyclic_shuffles(CyclicWord(u), CyclicWord(v)))
        ++out[cdes_set(w.canonical).size()];
    return out;
}

Word word_with_des_count(int m, int i) {
    for (const Word& w : all_permutations(m))
        if (des_set(w).size() == i) return w;
    throw std::invalid_argument("no word with that descent count");
}

Word word_with_cdes_count(int m, int i, int offset) {
    for (const Word& w : all_permutations(m))
        if (cdes_set(w).size() == i) {
            std::vector<int> xs;
            for (int x : w.letters) xs.push_back(x + offset);
            return Word(xs);
        }
    throw std::invalid_argument("no word with that cyclic descent count");
}

GenfunReport des_shuffle_genfun(int m, int n, int i, int j, int R) {
    if (R < m + n) throw std::invalid_argument("truncation too small");
    GenfunReport rep;
    Word u = word_with_des_count(m, i), v = word_with_des_count(n, j);
    {
        std::vector<int> xs;
        for (int x : v.letters) xs.push_back(x + m);
        v = Word(xs);
    }
    rep.lhs = QPoly::zero(R);
    auto tally = des_shuffle_brute(u, v);
    for (int k = 0; k < static_cast<int>(tally.size()); ++k)
        rep.lhs.coeff[k] = static_cast<long>(tally[k]);
    QPoly series = QPoly::zero(R);
    for (int r = 0; r <= R; ++r)
        series.coeff[r] =
            static_cast<long>(binomial(r + m - i, m) * binomial(r + n - j, n));
    rep.rhs = ordinary_mul(ordinary_pow(one_minus_q(R), m + n + 1), series);
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

GenfunReport cdes_shuffle_genfun(int m, int n, int i, int j, int R) {
    if (R < m + n) throw std::invalid_argument("truncation too small");
    GenfunReport rep;
    Word u = word_with_cdes_count(m, i, 0), v = word_with_cdes_count(n, j, m);
    rep.lhs = QPoly::zero(R);
    auto tally = cdes_shuffle_brute(u, v);
    for (int k = 0; k < static_cast<int>(tally.size()); ++k)
        rep.lhs.coeff[k] = static_cast<long>(tally[k]);
    QPoly series = QPoly::zero(R);
    for (int r = 0; r <= R; ++r)
        series.coeff[r] = Rat(static_cast<long>(r)) *
                          Rat(static_cast<long>(binomial(r + m - i - 1, m - 1) *
                                                binomial(r + n - j - 1, n - 1)));
    rep.rhs = ordinary_mul(ordinary_pow(one_minus_q(R), m + n), series);
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

}  // namespace cqsym
