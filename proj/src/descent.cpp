#include "cqsym/descent.hpp"

#include <stdexcept>

#include "cqsym/cqsym.hpp"
#include "cqsym/schur.hpp"

namespace cqsym {

void PermSum::add(const Word& w, long long c) {
    if (w.size() != n) throw std::invalid_argument("permutation of wrong size");
    if (c == 0) return;
    auto it = terms.find(w);
    if (it == terms.end())
        terms.emplace(w, c);
    else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

long long PermSum::coeff(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
}

Word compose(const Word& outer, const Word& inner) {
    if (outer.size() != inner.size()) throw std::invalid_argument("composing different sizes");
    std::vector<int> w(outer.size());
    for (int i = 0; i < outer.size(); ++i) w[i] = outer.letters[inner.letters[i] - 1];
    Word out;
    out.letters = std::move(w);
    return out;
}

PermSum d_elem(int n, const Subset& I) {
    if (I.n != n - 1) throw std::invalid_argument("descent set over wrong n");
    PermSum out = PermSum::zero(n);
    for (const Word& w : all_permutations(n))
        if (des_set(w) == I) out.add(w, 1);
    return out;
}

PermSum cd_elem(int n, const CyclicClass& A) {
    if (A.n != n) throw std::invalid_argument("class over wrong n");
    if (A.rank() == 0 || A.rank() == n)
        throw std::invalid_argument("cD is defined for proper nonempty classes only");
    PermSum out = PermSum::zero(n);
    for (const Word& w : all_permutations(n))
        if (cyclic_class(cdes_set(w)) == A) out.add(w, 1);
    return out;
}

PermSum gr_multiply(const PermSum& x, const PermSum& y) {
    if (x.n != y.n) throw std::invalid_argument("group ring degree mismatch");
    PermSum out = PermSum::zero(x.n);
    for (const auto& [s2, c2] : x.terms)
        for (const auto& [s1, c1] : y.terms) out.add(compose(s2, s1), c2 * c1);
    return out;
}

long long a_const(int n, const Subset& I, const Subset& J, const Subset& K) {
    Word pi;
    bool found = false;
    for (const Word& w : all_permutations(n))
        if (des_set(w) == K) {
            pi = w;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("no permutation with the requested descent set");
    long long count = 0;
    for (const Word& s1 : all_permutations(n)) {
        if (des_set(s1) != I) continue;
        if (des_set(compose(pi, inverse_word(s1))) == J) ++count;
    }
    return count;
}

long long tilde_a(int n, const CyclicClass& A, const Subset& J, const CyclicClass& B) {
    if (B.rank() == 0 || B.rank() == n)
        throw std::invalid_argument("tilde_a needs a proper class B");
    Word pi = least_word_with_cdes(n, B.canonical);
    long long count = 0;
    for (const Word& s1 : all_permutations(n)) {
        if (!(cyclic_class(cdes_set(s1)) == A)) continue;
        if (des_set(compose(pi, inverse_word(s1))) == J) ++count;
    }
    return count;
}

bool a_const_well_defined(int n) {
    // tallies (I,J) per π must agree across all π in the same descent class
    std::map<Subset, std::map<std::pair<Subset, Subset>, long long>> ref;
    for (const Word& pi : all_permutations(n)) {
        std::map<std::pair<Subset, Subset>, long long> tally;
        for (const Word& s1 : all_permutations(n))
            ++tally[{des_set(s1), des_set(compose(pi, inverse_word(s1)))}];
        Subset K = des_set(pi);
        auto it = ref.find(K);
        if (it == ref.end())
            ref.emplace(K, std::move(tally));
        else if (it->second != tally)
            return false;
    }
    return true;
}

bool tilde_a_well_defined(int n) {
    std::map<Subset, std::map<std::pair<Subset, Subset>, long long>> ref;
    for (const Word& pi : all_permutations(n)) {
        std::map<std::pair<Subset, Subset>, long long> tally;
        for (const Word& s1 : all_permutations(n))
            ++tally[{cyclic_class(cdes_set(s1)).canonical,
                     des_set(compose(pi, inverse_word(s1)))}];
        Subset B = cyclic_class(cdes_set(pi)).canonical;
        auto it = ref.find(B);
        if (it == ref.end())
            ref.emplace(B, std::move(tally));
        else if (it->second != tally)
            return false;
    }
    return true;
}

std::map<std::pair<Subset, Subset>, long long> qsym_internal_coproduct(int n, const Subset& K) {
    Word pi;
    bool found = false;
    for (const Word& w : all_permutations(n))
        if (des_set(w) == K) {
            pi = w;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("no permutation with the requested descent set");
    std::map<std::pair<Subset, Subset>, long long> out;
    for (const Word& s1 : all_permutations(n))
        ++out[{des_set(s1), des_set(compose(pi, inverse_word(s1)))}];
    return out;
}

Coproduct coproduct_fcyc(int n, const CyclicClass& B) {
    if (B.rank() == 0 || B.rank() == n)
        throw std::invalid_argument(
            "exceptional classes: use delta_h / delta_e with the Schur pairing");
    Coproduct out;
    out.n = n;
    out.B = B.canonical;
    Word pi = least_word_with_cdes(n, B.canonical);
    std::map<std::pair<Subset, Subset>, long long> tally;
    for (const Word& s1 : all_permutations(n))
        ++tally[{cyclic_class(cdes_set(s1)).canonical,
                 des_set(compose(pi, inverse_word(s1)))}];
    for (const auto& [key, cnt] : tally) {
        // coefficient (d_A/d_B)·ã, a nonnegative integer
        long long dA = cyclic_class(key.first).stabilizer;
        long long num = dA * cnt;
        if (num % B.stabilizer != 0)
            throw std::logic_error("coproduct coefficient is not integral");
        out.terms[key] = num / B.stabilizer;
    }
    return out;
}

std::map<std::pair<Subset, Subset>, long long> delta_h(int n) {
    std::map<std::pair<Subset, Subset>, long long> out;
    for (const Word& s : all_permutations(n)) ++out[{des_set(s), des_set(inverse_word(s))}];
    return out;
}

std::map<std::pair<Subset, Subset>, long long> delta_e(int n) {
    std::map<std::pair<Subset, Subset>, long long> out;
    std::vector<int> w0(n);
    for (int i = 0; i < n; ++i) w0[i] = n - i;
    Word longest(w0);
    for (const Word& s : all_permutations(n))
        ++out[{des_set(compose(s, longest)), des_set(inverse_word(s))}];
    return out;
}

std::map<std::pair<Subset, Subset>, long long> schur_cauchy_pairing(int n, bool conjugate) {
    std::map<std::pair<Subset, Subset>, long long> out;
    for (const Partition& lam : partitions_of(n)) {
        auto left = des_fibers(SkewShape::straight(lam));
        auto right = conjugate ? des_fibers(SkewShape::straight(lam.conjugate())) : left;
        for (const auto& [I, a] : left)
            for (const auto& [J, b] : right) out[{I, J}] += a * b;
    }
    return out;
}

LeftModuleReport left_module_check(int n) {
    LeftModuleReport rep;
    rep.n = n;
    rep.holds = true;
    auto classes = proper_cyclic_classes(n);
    std::map<Subset, PermSum> cds;
    for (const CyclicClass& A : classes) cds.emplace(A.canonical, cd_elem(n, A));
    // ã tables per class B via one representative π each
    std::map<Subset, std::map<std::pair<Subset, Subset>, long long>> tilde;
    for (const CyclicClass& B : classes) {
        Word pi = least_word_with_cdes(n, B.canonical);
        auto& t = tilde[B.canonical];
        for (const Word& s1 : all_permutations(n))
            ++t[{cyclic_class(cdes_set(s1)).canonical,
                 des_set(compose(pi, inverse_word(s1)))}];
    }
    for (const Subset& J : all_subsets(n - 1)) {
        PermSum dj = d_elem(n, J);
        for (const CyclicClass& A : classes) {
            PermSum lhs = gr_multiply(dj, cds.at(A.canonical));
            PermSum rhs = PermSum::zero(n);
            for (const CyclicClass& B : classes) {
                long long c = 0;
                auto it = tilde.at(B.canonical).find({A.canonical, J});
                if (it != tilde.at(B.canonical).end()) c = it->second;
                if (c == 0) continue;
                for (const auto& [w, v] : cds.at(B.canonical).terms) rhs.add(w, c * v);
            }
            ++rep.products_checked;
            if (!(lhs == rhs)) rep.holds = false;
        }
    }
    return rep;
}

std::optional<NonAlgebraWitness> non_algebra_witness(int n) {
    auto classes = proper_cyclic_classes(n);
    std::map<Subset, PermSum> cds;
    for (const CyclicClass& A : classes) cds.emplace(A.canonical, cd_elem(n, A));
    for (const CyclicClass& A : classes)
        for (const CyclicClass& B : classes) {
            PermSum prod = gr_multiply(cds.at(A.canonical), cds.at(B.canonical));
            // span membership <=> coefficient constancy on every cDes fiber
            std::map<Subset, std::pair<Word, long long>> first;
            for (const Word& w : all_permutations(n)) {
                Subset C = cyclic_class(cdes_set(w)).canonical;
                long long c = prod.coeff(w);
                auto it = first.find(C);
                if (it == first.end())
                    first.emplace(C, std::pair{w, c});
                else if (it->second.second != c) {
                    NonAlgebraWitness wit;
                    wit.n = n;
                    wit.A = A.canonical;
                    wit.B = B.canonical;
                    wit.pi1 = it->second.first;
                    wit.c1 = it->second.second;
                    wit.pi2 = w;
                    wit.c2 = c;
                    return wit;
                }
            }
        }
    return std::nullopt;
}

}  // namespace cqsym
