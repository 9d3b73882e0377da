#pragma once

#include <optional>

#include "cqsym/qsym.hpp"

namespace cqsym {

// Element of the group ring Z[S_n]; permutations in one-line notation.
// Composition convention, fixed once: (σ₂σ₁)(i) = σ₂(σ₁(i)), so the left
// factor acts last.
struct PermSum {
    int n = 0;
    std::map<Word, long long> terms;

    static PermSum zero(int n) { return PermSum{n, {}}; }
    void add(const Word& w, long long c);
    long long coeff(const Word& w) const;
    long long support_size() const { return static_cast<long long>(terms.size()); }

    bool operator==(const PermSum&) const = default;
};

Word compose(const Word& outer, const Word& inner);  // outer ∘ inner

PermSum d_elem(int n, const Subset& I);               // Σ_{Des(π)=I} π
PermSum cd_elem(int n, const CyclicClass& A);         // Σ_{cDes(π)∈A} π, A proper
PermSum gr_multiply(const PermSum& x, const PermSum& y);

// a_K^{IJ}: #{(σ₁,σ₂) : Des σ₁ = I, Des σ₂ = J, σ₂σ₁ = π}, any π with
// Des(π) = K.
long long a_const(int n, const Subset& I, const Subset& J, const Subset& K);

// ã_B^{AJ}: #{(σ₁,σ₂) : cDes σ₁ ∈ A, Des σ₂ = J, σ₂σ₁ = π}, any π with
// cDes(π) ∈ B.
long long tilde_a(int n, const CyclicClass& A, const Subset& J, const CyclicClass& B);

// independence of the constants from the choice of π, checked exhaustively
bool a_const_well_defined(int n);
bool tilde_a_well_defined(int n);

// Δ_n(F_{n,K}) = Σ a_K^{IJ} F_I ⊗ F_J on QSym_n.
std::map<std::pair<Subset, Subset>, long long> qsym_internal_coproduct(int n, const Subset& K);

// Δ_n(hF^cyc_{n,B}) = Σ (d_A/d_B) ã_B^{AJ} hF^cyc_A ⊗ F_J for proper B.
struct Coproduct {
    int n = 0;
    Subset B;                                          // canonical class rep
    std::map<std::pair<Subset, Subset>, long long> terms;  // (A rep, J) -> coeff
};
Coproduct coproduct_fcyc(int n, const CyclicClass& B);

// The exceptional classes: Δ(h_n) and Δ(e_n) as F ⊗ F coefficient tables,
// computed from permutation sums over inverse-descent pairs.
std::map<std::pair<Subset, Subset>, long long> delta_h(int n);
std::map<std::pair<Subset, Subset>, long long> delta_e(int n);

// Σ_λ s_λ ⊗ s_λ (or s_λ ⊗ s_{λ'}) in the same F ⊗ F coordinates.
std::map<std::pair<Subset, Subset>, long long> schur_cauchy_pairing(int n, bool conjugate);

struct LeftModuleReport {
    int n = 0;
    bool holds = false;
    long long products_checked = 0;
};
// D_J · cD_A = Σ_B ã_B^{AJ} cD_B for every J ⊆ [n-1] and proper class A.
LeftModuleReport left_module_check(int n);

struct NonAlgebraWitness {
    int n = 0;
    Subset A, B;        // cD_A · cD_B leaves the span
    Word pi1, pi2;      // same cDes class, different coefficients
    long long c1 = 0, c2 = 0;
};
// cD_A·cD_B outside span{cD_C} iff its coefficients are not constant on some
// cDes class fiber (the cD_C have disjoint supports covering S_n).
std::optional<NonAlgebraWitness> non_algebra_witness(int n);

}  // namespace cqsym
