#pragma once

#include <optional>
#include <variant>

#include "cqsym/qsym.hpp"

namespace cqsym {

enum class CBasis { hMcyc, hFcyc };

// Homogeneous cyclic quasi-symmetric function of degree n over one of the
// normalized bases, keyed by canonical class representatives.  In the hFcyc
// basis the class of ∅ is never a key (the basis excludes it; the rank-0
// element h_n is re-expressed through the linear dependence).
struct CQSym {
    int degree = 0;
    CBasis basis = CBasis::hMcyc;
    std::map<Subset, Rat> coeffs;  // canonical class representative -> coeff

    static CQSym zero(int n, CBasis b) { return CQSym{n, b, {}}; }

    Rat coeff(const CyclicClass& A) const;
    Rat coeff_of(const Subset& any_member) const;
    void add_term(const CyclicClass& A, const Rat& c);

    CQSym& operator+=(const CQSym& o);
    CQSym& operator*=(const Rat& c);

    bool operator==(const CQSym&) const = default;
};

// M^cyc_{n,J} = Σ_{j∈J} M_{n,(J-j)∩[n-1]}; zero for J = ∅ (n >= 1).
QSym mcyc_as_qsym(int n, const Subset& J);

// F^cyc_{n,J} = Σ_{i∈[n]} F_{n,(J-i)∩[n-1]}.
QSym fcyc_as_qsym(int n, const Subset& J);

// Single-term normalized element on the class of J.
CQSym normalize(int n, const Subset& J, CBasis family);

// Triangular change of basis with entries d_{A,B}/d_A (signed for hF -> hM).
CQSym to_basis(const CQSym& e, CBasis target);

QSym cqsym_to_qsym(const CQSym& e);

// Witness of a cyclicity failure: two rotation-equivalent compositions whose
// M coefficients differ.
struct NotCyclic {
    Composition first, second;
    Rat coeff_first, coeff_second;
};

// Membership test; on success returns exact hMcyc coordinates.
std::variant<CQSym, NotCyclic> from_qsym(const QSym& f);

bool is_cyclic(const QSym& f);

// True iff the hFcyc coordinate of the class [[n]] vanishes (n >= 2).
bool is_non_escher(const CQSym& e);

// (a,J) is the cyclic descent set of some word of length a.
bool cdes_realizable(int a, const Subset& J);

// Lexicographically least word in S_a with the given cyclic descent set.
Word least_word_with_cdes(int a, const Subset& J);

// F^cyc_{a,J}·F^cyc_{b,K} = Σ over cyclic shuffle classes of F^cyc_{a+b,cDes}.
QSym product_via_cyclic_shuffles(int a, const Subset& J, int b, const Subset& K);

// Same product in hFcyc coordinates (coefficient of hF_{n,C} per class C).
CQSym product_via_cyclic_shuffles_hf(int a, const Subset& J, int b, const Subset& K);

// ω(hF^cyc_{n,[J]}) = hF^cyc_{n,[[n]∖J]}; a ring involution.
CQSym omega(const CQSym& e);

// Cyclic extension of Des on the shuffle family W used for products with e_a:
// W = ⊔_i (a,a-1,...,1) ⧢ rot^i(w0) over an alphabet of b letters above a.
Subset cdes_star(const Word& w, int a, int b);
Word promote_p(const Word& w, int a, int b);
bool in_shuffle_family(const Word& w, int a, int b);
std::vector<Word> shuffle_family(int a, const Word& w0);

}  // namespace cqsym
