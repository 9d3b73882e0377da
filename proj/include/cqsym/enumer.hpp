#pragma once

#include "cqsym/qsym.hpp"

namespace cqsym {

// Truncated series in q with exact coefficients; index r holds the q^r term.
struct QPoly {
    int trunc = 0;
    std::vector<Rat> coeff;  // size trunc+1

    static QPoly zero(int R) { return QPoly{R, std::vector<Rat>(R + 1, Rat(0))}; }
    static QPoly one(int R);
    static QPoly q_power(int R, int k);

    Rat at(int r) const { return (r >= 0 && r <= trunc) ? coeff[r] : Rat(0); }

    bool operator==(const QPoly&) const = default;
};

QPoly qp_add(const QPoly& a, const QPoly& b);
QPoly qp_sub(const QPoly& a, const QPoly& b);
QPoly qp_scale(const Rat& c, QPoly a);

// max-product: q^i ⊙ q^j = q^{max(i,j)}, extended bilinearly
QPoly odot(const QPoly& a, const QPoly& b);

// ordinary product, truncated
QPoly ordinary_mul(const QPoly& a, const QPoly& b);
QPoly ordinary_pow(const QPoly& a, int e);

// q/(1-q) = q + q^2 + ... truncated
QPoly geometric_q(int R);
// 1 - q
QPoly one_minus_q(int R);

// Ψ(M_{n,J}) = (q/(1-q))^{|J|+1}, extended linearly over the M basis.
QPoly psi(const QSym& f, int R);

// Monomial-level evaluation of Ψ through a truncated expansion; exact up to
// q^R when expanded in R variables.
QPoly psi_via_truncation(const QSym& f, int R);

// #shuffles w of u,v with des(u)=i, des(v)=j, des(w)=k; entry k of the
// returned vector (size m+n+1).
std::vector<long long> des_shuffle_dist(int m, int n, int i, int j);

// cyclic analogue over cyclic shuffle classes; both closed forms are
// evaluated and must agree.
std::vector<long long> cdes_shuffle_dist(int m, int n, int i, int j);

// brute-force tallies for specific words
std::vector<long long> des_shuffle_brute(const Word& u, const Word& v);
std::vector<long long> cdes_shuffle_brute(const Word& u, const Word& v);

struct GenfunReport {
    QPoly lhs, rhs;
    bool holds = false;
};

// Σ_w q^{des(w)} = (1-q)^{m+n+1} Σ_r C(r+m-i,m) C(r+n-j,n) q^r
GenfunReport des_shuffle_genfun(int m, int n, int i, int j, int R);
// Σ_{[w]} q^{cdes(w)} = (1-q)^{m+n} Σ_r C(r+m-i-1,m-1) C(r+n-j-1,n-1) r q^r
GenfunReport cdes_shuffle_genfun(int m, int n, int i, int j, int R);

// least-word realizations used by the brute-force sides
Word word_with_des_count(int m, int i);              // des(u) = i, letters [m]
Word word_with_cdes_count(int m, int i, int offset); // cdes(u) = i, letters offset+[m]

}  // namespace cqsym
