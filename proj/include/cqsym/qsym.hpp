#pragma once

#include <map>
#include <vector>

#include "cqsym/combinatorics.hpp"
#include "cqsym/rational.hpp"

namespace cqsym {

// Homogeneous quasi-symmetric function of degree n, exact coefficients over
// the monomial basis {M_{n,J} : J ⊆ [n-1]}.  Zero coefficients are never
// stored.  Degree 0 is the constant with key ∅.
struct QSym {
    int degree = 0;
    std::map<Subset, Rat> coeffs;

    static QSym zero(int n) { return QSym{n, {}}; }
    static QSym one();

    bool is_zero() const { return coeffs.empty(); }
    Rat coeff(const Subset& J) const;
    void add_term(const Subset& J, const Rat& c);

    QSym& operator+=(const QSym& o);
    QSym& operator-=(const QSym& o);
    QSym& operator*=(const Rat& c);

    bool operator==(const QSym&) const = default;
};

QSym operator+(QSym a, const QSym& b);
QSym operator-(QSym a, const QSym& b);
QSym operator*(const Rat& c, QSym a);

QSym qsym_monomial(int n, const Subset& J);
QSym qsym_fundamental(int n, const Subset& J);
QSym qsym_h(int n);                     // h_n = F_{n,∅}
QSym qsym_e(int n);                     // e_n = F_{n,[n-1]}
QSym qsym_h(const Composition& alpha);  // h_{α_1} h_{α_2} ···

// Coefficients in the fundamental basis (Möbius transform of the M basis).
std::map<Subset, Rat> to_fundamental(const QSym& f);
QSym from_fundamental(int n, const std::map<Subset, Rat>& fcoeffs);

// ω: F_{n,J} ↦ F_{n,[n-1]∖J}; a ring automorphism of QSym.
QSym qsym_omega(const QSym& f);

// Quasi-shuffle product on the M basis.
QSym multiply(const QSym& f, const QSym& g);

// Overlapping shuffles of two compositions, with multiplicity.
std::map<Composition, long long> quasi_shuffle(const Composition& a, const Composition& b);

// Truncated polynomial in variables x_1..x_k; terms keyed by exponent vector.
struct TruncPoly {
    int k = 0;
    std::map<std::vector<int>, Rat> terms;

    void add_term(const std::vector<int>& e, const Rat& c);

    bool operator==(const TruncPoly&) const = default;
};

TruncPoly expand_truncated(const QSym& f, int k);
TruncPoly tp_mul(const TruncPoly& a, const TruncPoly& b);
TruncPoly tp_add(const TruncPoly& a, const TruncPoly& b);

// Evaluate f with its variables set to the given monomials (exponent vectors
// over base_vars), listed in increasing variable order.  Used for
// two-alphabet expansions such as f(XY).
TruncPoly qsym_eval_on_monomials(const QSym& f, const std::vector<std::vector<int>>& values,
                                 int base_vars);

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    Partition conjugate() const;
    bool is_hook() const;  // (n-k, 1^k), including (n) and (1^n)

    auto operator<=>(const Partition&) const = default;
};

std::vector<Partition> partitions_of(int n);  // lexicographically descending
Partition sort_to_partition(const Composition& c);

bool is_symmetric(const QSym& f);

// ⟨f, h_λ⟩ for symmetric f: the coefficient of m_λ.  Throws if f is not
// symmetric.
Rat inner_h(const QSym& f, const Partition& lambda);

// Coefficient of M at the key of a composition (used to read ⟨f, h_α⟩ for
// symmetric f without re-checking symmetry per call).
Rat coeff_at_composition(const QSym& f, const Composition& alpha);

}  // namespace cqsym
