#include "cqsym/cqsym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cqsym {

Rat CQSym::coeff(const CyclicClass& A) const {
    auto it = coeffs.find(A.canonical);
    return it == coeffs.end() ? Rat(0) : it->second;
}

Rat CQSym::coeff_of(const Subset& any_member) const {
    return coeff(cyclic_class(any_member));
}

void CQSym::add_term(const CyclicClass& A, const Rat& c) {
    if (A.n != degree) throw std::invalid_argument("CQSym key over wrong n");
    if (c == 0) return;
    if (degree >= 1 && A.rank() == 0) {
        if (basis == CBasis::hMcyc) return;  // hM^cyc_{n,∅} is the zero function
        // hF^cyc_{n,[∅]} = Σ_{A ≠ [∅]} (-1)^{r(A)+1} hF^cyc_{n,A}
        for (const CyclicClass& B : all_cyclic_classes(degree)) {
            Rat t = (B.rank() % 2 == 0) ? -c : c;
            auto it = coeffs.find(B.canonical);
            if (it == coeffs.end())
                coeffs.emplace(B.canonical, t);
            else {
                it->second += t;
                if (it->second == 0) coeffs.erase(it);
            }
        }
        return;
    }
    auto it = coeffs.find(A.canonical);
    if (it == coeffs.end())
        coeffs.emplace(A.canonical, c);
    else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

CQSym& CQSym::operator+=(const CQSym& o) {
    if (degree != o.degree || basis != o.basis)
        throw std::invalid_argument("adding CQSym of different degree or basis");
    for (const auto& [rep, c] : o.coeffs) add_term(cyclic_class(rep), c);
    return *this;
}

CQSym& CQSym::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs.clear();
        return *this;
    }
    for (auto& [rep, v] : coeffs) v *= c;
    return *this;
}

QSym mcyc_as_qsym(int n, const Subset& J) {
    if (J.n != n) throw std::invalid_argument("subset over wrong n");
    if (n == 0) return QSym::one();
    QSym out = QSym::zero(n);
    for (int j : J.elems) out += qsym_monomial(n, J.shifted(-j).restricted(n - 1));
    return out;
}

QSym fcyc_as_qsym(int n, const Subset& J) {
    if (J.n != n) throw std::invalid_argument("subset over wrong n");
    if (n == 0) return QSym::one();
    QSym out = QSym::zero(n);
    for (int i = 1; i <= n; ++i) out += qsym_fundamental(n, J.shifted(-i).restricted(n - 1));
    return out;
}

CQSym normalize(int n, const Subset& J, CBasis family) {
    CQSym e = CQSym::zero(n, family);
    if (n == 0) {
        e.coeffs[Subset::empty(0)] = 1;
        return e;
    }
    e.add_term(cyclic_class(J), 1);
    return e;
}

CQSym to_basis(const CQSym& e, CBasis target) {
    if (e.basis == target) return e;
    CQSym out = CQSym::zero(e.degree, target);
    if (e.degree == 0) {
        out.coeffs = e.coeffs;
        return out;
    }
    for (const auto& [rep, c] : e.coeffs) {
        CyclicClass A = cyclic_class(rep);
        for (const CyclicClass& B : all_cyclic_classes(e.degree)) {
            int d = d_AB(A, B);
            if (d == 0) continue;
            Rat coef = Rat(d) / A.stabilizer;
            if (target == CBasis::hMcyc) {
                // hF_{n,A} = Σ_{B ≥ A} (d_{A,B}/d_A) hM_{n,B}
                out.add_term(B, c * coef);
            } else {
                // hM_{n,A} = Σ_{B ≥ A} (-1)^{r(B)-r(A)} (d_{A,B}/d_A) hF_{n,B}
                if ((B.rank() - A.rank()) % 2 != 0) coef = -coef;
                out.add_term(B, c * coef);
            }
        }
    }
    return out;
}

QSym cqsym_to_qsym(const CQSym& e) {
    if (e.degree == 0) {
        QSym f = QSym::one();
        auto it = e.coeffs.find(Subset::empty(0));
        f *= (it == e.coeffs.end() ? Rat(0) : it->second);
        return f;
    }
    QSym out = QSym::zero(e.degree);
    for (const auto& [rep, c] : e.coeffs) {
        CyclicClass A = cyclic_class(rep);
        QSym q = (e.basis == CBasis::hMcyc) ? mcyc_as_qsym(e.degree, rep)
                                            : fcyc_as_qsym(e.degree, rep);
        q *= c / Rat(A.stabilizer);
        out += q;
    }
    return out;
}

std::variant<CQSym, NotCyclic> from_qsym(const QSym& f) {
    int n = f.degree;
    if (n == 0) {
        CQSym e = CQSym::zero(0, CBasis::hMcyc);
        Rat c = f.coeff(Subset::empty(0));
        if (c != 0) e.coeffs[Subset::empty(0)] = c;
        return e;
    }
    // Group the subsets of [n-1] by the rotation class of their composition;
    // each group carries the coefficient of one hM^cyc basis element.
    std::map<Subset, std::vector<Subset>> groups;  // class canonical -> keys
    for (const Subset& K : all_subsets(n - 1)) {
        Composition alpha = co(K, n);
        std::vector<int> anchor;
        int run = 0;
        for (int p : alpha.parts) {
            run += p;
            anchor.push_back(run);
        }
        CyclicClass A = cyclic_class(Subset(n, std::move(anchor)));
        groups[A.canonical].push_back(K);
    }
    CQSym e = CQSym::zero(n, CBasis::hMcyc);
    for (const auto& [rep, keys] : groups) {
        Rat ref = f.coeff(keys.front());
        for (const Subset& K : keys) {
            Rat v = f.coeff(K);
            if (v != ref)
                return NotCyclic{co(keys.front(), n), co(K, n), ref, v};
        }
        if (ref != 0) e.add_term(cyclic_class(rep), ref);
    }
    return e;
}

bool is_cyclic(const QSym& f) { return std::holds_alternative<CQSym>(from_qsym(f)); }

bool is_non_escher(const CQSym& e) {
    if (e.degree <= 1) return true;
    CQSym hf = to_basis(e, CBasis::hFcyc);
    return hf.coeff(cyclic_class(Subset::full(e.degree))) == 0;
}

bool cdes_realizable(int a, const Subset& J) {
    if (J.n != a) return false;
    if (a <= 1) return J.is_empty();
    return !J.is_empty() && !J.is_full();
}

Word least_word_with_cdes(int a, const Subset& J) {
    if (!cdes_realizable(a, J))
        throw std::invalid_argument("subset is not a cyclic descent set for this length");
    if (a == 0) return Word();
    std::vector<int> p(a);
    std::iota(p.begin(), p.end(), 1);
    do {
        Word w;
        w.letters = p;
        if (cdes_set(w) == J) return w;
    } while (std::next_permutation(p.begin(), p.end()));
    throw std::logic_error("no word with the requested cyclic descent set");
}

namespace {

Word shifted_letters(const Word& w, int offset) {
    std::vector<int> xs;
    xs.reserve(w.letters.size());
    for (int x : w.letters) xs.push_back(x + offset);
    Word out;
    out.letters = std::move(xs);
    return out;
}

}  // namespace

QSym product_via_cyclic_shuffles(int a, const Subset& J, int b, const Subset& K) {
    if (!cdes_realizable(a, J) || !cdes_realizable(b, K))
        throw std::invalid_argument("unrealizable cyclic descent data");
    if (a == 0) return fcyc_as_qsym(b, K);
    if (b == 0) return fcyc_as_qsym(a, J);
    Word u = least_word_with_cdes(a, J);
    Word v = shifted_letters(least_word_with_cdes(b, K), a);
    QSym out = QSym::zero(a + b);
    for (const CyclicWord& cw : cyclic_shuffles(CyclicWord(u), CyclicWord(v)))
        out += fcyc_as_qsym(a + b, cdes_set(cw.canonical));
    return out;
}

CQSym product_via_cyclic_shuffles_hf(int a, const Subset& J, int b, const Subset& K) {
    if (!cdes_realizable(a, J) || !cdes_realizable(b, K))
        throw std::invalid_argument("unrealizable cyclic descent data");
    int n = a + b;
    CQSym out = CQSym::zero(n, CBasis::hFcyc);
    if (n == 0) {
        out.coeffs[Subset::empty(0)] = 1;
        return out;
    }
    if (a == 0 || b == 0) {
        CyclicClass C = cyclic_class(a == 0 ? K : J);
        out.add_term(C, C.stabilizer);
        return out;
    }
    Word u = least_word_with_cdes(a, J);
    Word v = shifted_letters(least_word_with_cdes(b, K), a);
    for (const CyclicWord& cw : cyclic_shuffles(CyclicWord(u), CyclicWord(v))) {
        CyclicClass C = cyclic_class(cdes_set(cw.canonical));
        out.add_term(C, C.stabilizer);  // F^cyc_{n,C} = d_C · hF^cyc_{n,C}
    }
    return out;
}

CQSym omega(const CQSym& e) {
    if (e.degree == 0) return e;
    CQSym hf = to_basis(e, CBasis::hFcyc);
    CQSym out = CQSym::zero(e.degree, CBasis::hFcyc);
    for (const auto& [rep, c] : hf.coeffs)
        out.add_term(cyclic_class(rep.complement()), c);
    return to_basis(out, e.basis);
}

bool in_shuffle_family(const Word& w, int a, int b) {
    if (w.size() != a + b) return false;
    std::vector<int> small;
    int big = 0;
    for (int x : w.letters) {
        if (x <= a)
            small.push_back(x);
        else
            ++big;
    }
    if (big != b || static_cast<int>(small.size()) != a) return false;
    for (int i = 0; i < a; ++i)
        if (small[i] != a - i) return false;  // subword must read a, a-1, ..., 1
    return true;
}

Subset cdes_star(const Word& w, int a, int b) {
    if (!in_shuffle_family(w, a, b))
        throw std::invalid_argument("word is not in the shuffle family W");
    int n = a + b;
    Subset d = des_set(w);
    std::vector<int> v = d.elems;
    if (w.letters[n - 1] > w.letters[0] || w.letters[0] == a) v.push_back(n);
    return Subset(n, std::move(v));
}

Word promote_p(const Word& w, int a, int b) {
    if (!in_shuffle_family(w, a, b))
        throw std::invalid_argument("word is not in the shuffle family W");
    int n = a + b;
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i)
        if (w.letters[i] > a) out[(i + 1) % n] = w.letters[i];
    int next = a;
    for (int i = 0; i < n; ++i)
        if (out[i] == 0) out[i] = next--;
    Word res;
    res.letters = std::move(out);
    return res;
}

std::vector<Word> shuffle_family(int a, const Word& w0) {
    int b = w0.size();
    for (int x : w0.letters)
        if (x <= a) throw std::invalid_argument("w0 letters must exceed a");
    std::vector<int> dec(a);
    for (int i = 0; i < a; ++i) dec[i] = a - i;
    Word decw(dec);
    std::vector<Word> out;
    for (int i = 0; i < b; ++i)
        for (const Word& w : shuffles(decw, w0.rotated(i))) out.push_back(w);
    return out;
}

}  // namespace cqsym
