#pragma once

#include <set>
#include <utility>

#include "cqsym/cqsym.hpp"

namespace cqsym {

// Skew shape λ/μ in English notation; row 0 is the top row, mu is padded
// with zeros to the length of lambda.  Rows with lambda_i == mu_i (empty)
// are rejected.
struct SkewShape {
    std::vector<int> lambda, mu;

    SkewShape() = default;
    SkewShape(std::vector<int> lam, std::vector<int> m);
    static SkewShape straight(const Partition& lam);
    static SkewShape of(const Partition& lam, const Partition& m);

    int rows() const { return static_cast<int>(lambda.size()); }
    int cells() const;
    bool contains(int r, int c) const;  // 0-based
    std::vector<std::pair<int, int>> cell_list() const;  // row-major

    bool connected() const;
    bool ribbon() const;  // contains no 2x2 square
    bool is_connected_ribbon() const { return connected() && ribbon(); }
    std::vector<SkewShape> components() const;  // southwest to northeast

    bool operator==(const SkewShape&) const = default;
    auto operator<=>(const SkewShape&) const = default;
};

// Direct sum ν¹ ⊕ ... ⊕ ν^t, listed southwest to northeast.
SkewShape oplus(const std::vector<SkewShape>& parts);
// (1^k) ⊕ (n-k), the shape whose cDes fibers are the k-subsets of [n].
SkewShape column_row_shape(int n, int k);

// Standard Young tableau: entry[i] fills cell_list()[i].
struct Tableau {
    SkewShape shape;
    std::vector<int> entry;
};

std::vector<Tableau> syt_list(const SkewShape& s);
long long syt_count(const SkewShape& s);
Subset des_of_tableau(const Tableau& t);

// Gessel expansion s_{λ/μ} = Σ_T F_{n,Des(T)}.
QSym schur(const SkewShape& s);

// Descent fiber sizes m(J) = #{T : Des(T) = J}.
std::map<Subset, long long> des_fibers(const SkewShape& s);

// s̃_{cc(J)} = Σ_{∅≠I⊆J} (-1)^{#(J∖I)} h_{cc(I)}, the inner-product dual of
// the normalized fundamental basis.
QSym cyclic_ribbon_schur(const Subset& J);

// Cyclic descent fiber sizes m^cyc(A) = ⟨s_{λ/μ}, s̃_{cc(J)}⟩ for J ∈ A.
// proper = shape is not a connected ribbon (values then count tableaux).
struct FiberTable {
    SkewShape shape;
    int n = 0;
    bool proper = false;
    long long tableaux = 0;
    std::map<Subset, Rat> fibers;  // canonical class rep -> value, zeros absent

    Rat at_class(const CyclicClass& A) const;
    Rat at(const Subset& any_member) const;
};

FiberTable cdes_fibers(const SkewShape& s);

// s_{λ/μ} = Σ_A m^cyc(A) hF^cyc_{n,A}; rejects connected ribbons (use the
// hook expansion for those).
CQSym schur_in_hfcyc(const SkewShape& s);

// Expansion of a symmetric function in Schur functions: a unitriangular
// solve against ⟨s_μ, h_λ⟩ in a dominance-compatible order, verified by
// reconstruction.  Throws if f is not symmetric.
std::map<Partition, Rat> schur_expand(const QSym& f);

struct HookExpansionReport {
    int n = 0, k = 0;
    bool raw_holds = false;
    bool normalized_holds = false;
    std::map<Subset, long long> signed_coeffs;  // class rep -> (-1)^{r(A)-k-1}
};
// n·s_{(n-k,1^k)} = Σ_{|J|>k} (-1)^{|J|-k-1} F^cyc_{n,J}, and its normalized
// counterpart.
HookExpansionReport hook_expansion(int n, int k);

struct SnCdesReport {
    int n = 0;
    bool holds = false;
    std::map<Subset, long long> lhs;  // #{π : cDes(π) = J}
    std::map<Subset, long long> rhs;  // Σ f^λ m^cyc_λ(J) + hook-sum terms
};
// Distribution of cDes over S_n against the shape-sum expansion.
SnCdesReport sn_cdes_identity(int n);

// fiber((n-k,1^{k-1})⊕(1), J) - fiber((n-k,2,1^{k-2}), J), which is the
// indicator of |J| = k; keyed by proper nonempty subsets of [n].
std::map<Subset, long long> near_hook_difference(int n, int k);

struct DisconnectedShuffleReport {
    int m = 0, n = 0;
    bool holds = false;
    std::map<Subset, long long> lhs;        // fibers of λ⊕μ per subset
    std::map<Subset, long long> rhs_count;  // Σ_{σ,τ} shuffle tally, divided by mn
};
// cDes generating function of SYT(λ⊕μ) from cyclic shuffles of permutation
// lifts A_λ, A_μ chosen greedily per fiber.
DisconnectedShuffleReport disconnected_shuffle_identity(const Partition& lam,
                                                        const Partition& mu);

struct ConjectureReport {
    bool symmetric = false;
    bool schur_positive = false;  // meaningful only when symmetric
    std::map<Partition, Rat> expansion;
};
// Σ_{π : [cDes(π^{-1})]=[J]} F^cyc_{n,cDes(π)}: symmetry and Schur sign check.
ConjectureReport conjecture_check(int n, const Subset& J);

// All skew shapes with n cells, no empty rows and no empty columns.
std::vector<SkewShape> all_basic_skew_shapes(int n);

Word inverse_word(const Word& w);

}  // namespace cqsym
