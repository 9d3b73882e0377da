#include "cqsym/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cqsym {

SkewShape::SkewShape(std::vector<int> lam, std::vector<int> m)
    : lambda(std::move(lam)), mu(std::move(m)) {
    while (mu.size() < lambda.size()) mu.push_back(0);
    if (mu.size() != lambda.size()) throw std::invalid_argument("mu longer than lambda");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i > 0 && (lambda[i] > lambda[i - 1] || mu[i] > mu[i - 1]))
            throw std::invalid_argument("rows must be weakly decreasing");
        if (mu[i] < 0 || mu[i] >= lambda[i])
            throw std::invalid_argument("need mu_i < lambda_i on every row");
    }
}

SkewShape SkewShape::straight(const Partition& lam) {
    return SkewShape(lam.parts, std::vector<int>(lam.parts.size(), 0));
}

SkewShape SkewShape::of(const Partition& lam, const Partition& m) {
    return SkewShape(lam.parts, m.parts);
}

int SkewShape::cells() const {
    int c = 0;
    for (int i = 0; i < rows(); ++i) c += lambda[i] - mu[i];
    return c;
}

bool SkewShape::contains(int r, int c) const {
    return r >= 0 && r < rows() && c >= mu[r] && c < lambda[r];
}

std::vector<std::pair<int, int>> SkewShape::cell_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(cells());
    for (int r = 0; r < rows(); ++r)
        for (int c = mu[r]; c < lambda[r]; ++c) out.emplace_back(r, c);
    return out;
}

bool SkewShape::connected() const { return components().size() <= 1; }

bool SkewShape::ribbon() const {
    for (int r = 0; r + 1 < rows(); ++r)
        for (int c = 0; c + 1 < lambda[r]; ++c)
            if (contains(r, c) && contains(r, c + 1) && contains(r + 1, c) &&
                contains(r + 1, c + 1))
                return false;
    return true;
}

namespace {

SkewShape shape_from_cells(const std::set<std::pair<int, int>>& cells) {
    int rmin = cells.begin()->first, rmax = rmin, cmin = cells.begin()->second;
    for (auto [r, c] : cells) {
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        cmin = std::min(cmin, c);
    }
    std::vector<int> lam, mu;
    for (int r = rmin; r <= rmax; ++r) {
        int lo = -1, hi = -1;
        for (auto [rr, cc] : cells)
            if (rr == r) {
                if (lo < 0 || cc < lo) lo = cc;
                if (cc > hi) hi = cc;
            }
        lam.push_back(hi - cmin + 1);
        mu.push_back(lo - cmin);
    }
    return SkewShape(std::move(lam), std::move(mu));
}

}  // namespace

std::vector<SkewShape> SkewShape::components() const {
    auto cells = cell_list();
    std::set<std::pair<int, int>> left(cells.begin(), cells.end());
    std::vector<SkewShape> out;
    std::vector<int> maxrows;
    while (!left.empty()) {
        std::set<std::pair<int, int>> comp;
        std::vector<std::pair<int, int>> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            auto [r, c] = stack.back();
            stack.pop_back();
            comp.insert({r, c});
            for (auto [dr, dc] :
                 std::initializer_list<std::pair<int, int>>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                auto it = left.find({r + dr, c + dc});
                if (it != left.end()) {
                    stack.push_back(*it);
                    left.erase(it);
                }
            }
        }
        int mr = 0;
        for (auto [r, c] : comp) mr = std::max(mr, r);
        maxrows.push_back(mr);
        out.push_back(shape_from_cells(comp));
    }
    // southwest (bottom rows) first
    std::vector<std::size_t> order(out.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return maxrows[a] > maxrows[b]; });
    std::vector<SkewShape> sorted;
    for (std::size_t i : order) sorted.push_back(out[i]);
    return sorted;
}

SkewShape oplus(const std::vector<SkewShape>& parts) {
    if (parts.empty()) throw std::invalid_argument("oplus of no parts");
    std::vector<int> offsets;
    int off = 0;
    for (const SkewShape& p : parts) {
        offsets.push_back(off);
        off += p.lambda[0];
    }
    std::vector<int> lam, mu;
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i)
        for (int r = 0; r < parts[i].rows(); ++r) {
            lam.push_back(parts[i].lambda[r] + offsets[i]);
            mu.push_back(parts[i].mu[r] + offsets[i]);
        }
    return SkewShape(std::move(lam), std::move(mu));
}

SkewShape column_row_shape(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("need 1 <= k <= n-1");
    return oplus({SkewShape::straight(Partition(std::vector<int>(k, 1))),
                  SkewShape::straight(Partition({n - k}))});
}

namespace {

void syt_rec(const SkewShape& s, const std::vector<std::pair<int, int>>& cells,
             std::vector<int>& entry, std::vector<bool>& filled, int next,
             std::vector<Tableau>& out) {
    int n = static_cast<int>(cells.size());
    if (next > n) {
        out.push_back(Tableau{s, entry});
        return;
    }
    for (int i = 0; i < n; ++i) {
        if (filled[i]) continue;
        auto [r, c] = cells[i];
        bool ready = true;
        if (s.contains(r, c - 1)) {
            auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{r, c - 1});
            if (!filled[it - cells.begin()]) ready = false;
        }
        if (ready && s.contains(r - 1, c)) {
            auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{r - 1, c});
            if (!filled[it - cells.begin()]) ready = false;
        }
        if (!ready) continue;
        filled[i] = true;
        entry[i] = next;
        syt_rec(s, cells, entry, filled, next + 1, out);
        filled[i] = false;
        entry[i] = 0;
    }
}

}  // namespace

std::vector<Tableau> syt_list(const SkewShape& s) {
    auto cells = s.cell_list();
    std::vector<Tableau> out;
    std::vector<int> entry(cells.size(), 0);
    std::vector<bool> filled(cells.size(), false);
    syt_rec(s, cells, entry, filled, 1, out);
    return out;
}

long long syt_count(const SkewShape& s) {
    return static_cast<long long>(syt_list(s).size());
}

Subset des_of_tableau(const Tableau& t) {
    auto cells = t.shape.cell_list();
    int n = static_cast<int>(cells.size());
    std::vector<int> row_of(n + 1, 0);
    for (int i = 0; i < n; ++i) row_of[t.entry[i]] = cells[i].first;
    std::vector<int> v;
    for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) v.push_back(i);
    return Subset(std::max(n - 1, 0), std::move(v));
}

QSym schur(const SkewShape& s) {
    int n = s.cells();
    QSym out = QSym::zero(n);
    for (const Tableau& t : syt_list(s)) out += qsym_fundamental(n, des_of_tableau(t));
    return out;
}

std::map<Subset, long long> des_fibers(const SkewShape& s) {
    std::map<Subset, long long> out;
    for (const Tableau& t : syt_list(s)) ++out[des_of_tableau(t)];
    return out;
}

QSym cyclic_ribbon_schur(const Subset& J) {
    if (J.is_empty()) throw std::invalid_argument("cyclic_ribbon_schur needs J nonempty");
    int n = J.n;
    QSym out = QSym::zero(n);
    int t = J.size();
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << t); ++b) {
        std::vector<int> elems;
        for (int i = 0; i < t; ++i)
            if (b & (std::uint64_t{1} << i)) elems.push_back(J.elems[i]);
        int drop = t - static_cast<int>(elems.size());
        QSym h = qsym_h(cc(Subset(n, std::move(elems))));
        if (drop % 2 != 0) h *= Rat(-1);
        out += h;
    }
    return out;
}

Rat FiberTable::at_class(const CyclicClass& A) const {
    auto it = fibers.find(A.canonical);
    return it == fibers.end() ? Rat(0) : it->second;
}

Rat FiberTable::at(const Subset& J) const { return at_class(cyclic_class(J)); }

FiberTable cdes_fibers(const SkewShape& s) {
    FiberTable out;
    out.shape = s;
    out.n = s.cells();
    out.proper = !s.is_connected_ribbon();
    out.tableaux = syt_count(s);
    QSym f = schur(s);
    for (const CyclicClass& A : all_cyclic_classes(out.n)) {
        // ⟨f, s̃_{cc(J)}⟩ expands through h into an alternating sum of
        // monomial coefficients of f, one per nonempty I ⊆ J.
        const Subset& J = A.canonical;
        int t = J.size();
        Rat val(0);
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << t); ++b) {
            std::vector<int> elems;
            for (int i = 0; i < t; ++i)
                if (b & (std::uint64_t{1} << i)) elems.push_back(J.elems[i]);
            int drop = t - static_cast<int>(elems.size());
            Rat c = coeff_at_composition(f, cc(Subset(out.n, std::move(elems))));
            val += (drop % 2 == 0) ? c : -c;
        }
        if (val != 0) out.fibers.emplace(J, val);
    }
    return out;
}

CQSym schur_in_hfcyc(const SkewShape& s) {
    if (s.is_connected_ribbon())
        throw std::domain_error(
            "connected ribbon shapes have no cyclic descent extension; "
            "use hook_expansion or the raw fiber table");
    FiberTable ft = cdes_fibers(s);
    CQSym out = CQSym::zero(ft.n, CBasis::hFcyc);
    for (const auto& [rep, c] : ft.fibers) out.add_term(cyclic_class(rep), c);
    return out;
}

std::map<Partition, Rat> schur_expand(const QSym& f) {
    if (!is_symmetric(f)) throw std::domain_error("schur_expand requires a symmetric function");
    int n = f.degree;
    std::vector<Partition> lams = partitions_of(n);  // lex descending refines dominance
    std::map<Partition, QSym> schur_of;
    for (const Partition& lam : lams) schur_of.emplace(lam, schur(SkewShape::straight(lam)));
    std::map<Partition, Rat> coeff;
    for (const Partition& lam : lams) {
        Rat c = coeff_at_composition(f, Composition(lam.parts));  // ⟨f, h_λ⟩
        for (const auto& [mu, cmu] : coeff)
            c -= cmu * coeff_at_composition(schur_of.at(mu), Composition(lam.parts));
        if (c != 0) coeff.emplace(lam, c);
    }
    QSym check = QSym::zero(n);
    for (const auto& [lam, c] : coeff) {
        QSym t = schur_of.at(lam);
        t *= c;
        check += t;
    }
    if (!(check == f)) throw std::logic_error("schur expansion failed to reconstruct input");
    return coeff;
}

HookExpansionReport hook_expansion(int n, int k) {
    if (k < 0 || k > n - 1) throw std::invalid_argument("hook_expansion needs 0 <= k <= n-1");
    HookExpansionReport rep;
    rep.n = n;
    rep.k = k;
    std::vector<int> hook{n - k};
    hook.insert(hook.end(), k, 1);
    QSym s = schur(SkewShape::straight(Partition(hook)));

    QSym raw = QSym::zero(n);
    for (const Subset& J : all_subsets(n)) {
        if (J.size() <= k) continue;
        QSym f = fcyc_as_qsym(n, J);
        if ((J.size() - k - 1) % 2 != 0) f *= Rat(-1);
        raw += f;
    }
    QSym ns = s;
    ns *= Rat(n);
    rep.raw_holds = (raw == ns);

    QSym norm = QSym::zero(n);
    for (const CyclicClass& A : all_cyclic_classes(n)) {
        if (A.rank() <= k) continue;
        long long sign = ((A.rank() - k - 1) % 2 == 0) ? 1 : -1;
        rep.signed_coeffs.emplace(A.canonical, sign);
        QSym f = cqsym_to_qsym(normalize(n, A.canonical, CBasis::hFcyc));
        f *= Rat(static_cast<long>(sign));
        norm += f;
    }
    rep.normalized_holds = (norm == s);
    return rep;
}

SnCdesReport sn_cdes_identity(int n) {
    if (n < 2) throw std::invalid_argument("sn_cdes_identity needs n >= 2");
    SnCdesReport rep;
    rep.n = n;
    for (const Word& w : all_permutations(n)) ++rep.lhs[cdes_set(w)];

    std::map<Subset, Rat> rhs;
    for (const Partition& lam : partitions_of(n)) {
        if (lam.is_hook()) continue;
        FiberTable ft = cdes_fibers(SkewShape::straight(lam));
        Rat fl(static_cast<long>(ft.tableaux));
        for (const Subset& J : all_subsets(n)) {
            Rat v = ft.at(J);
            if (v != 0) rhs[J] += fl * v;
        }
    }
    for (int k = 1; k <= n - 1; ++k) {
        FiberTable ft = cdes_fibers(column_row_shape(n, k));
        Rat fac(static_cast<long>(binomial(n - 2, k - 1)));
        for (const Subset& J : all_subsets(n)) {
            Rat v = ft.at(J);
            if (v != 0) rhs[J] += fac * v;
        }
    }
    for (const auto& [J, v] : rhs)
        if (v != 0) rep.rhs[J] = to_long(v);
    rep.holds = (rep.lhs == rep.rhs);
    return rep;
}

std::map<Subset, long long> near_hook_difference(int n, int k) {
    if (k < 2 || k > n - 2) throw std::invalid_argument("need 2 <= k <= n-2");
    std::vector<int> hook{n - k};
    hook.insert(hook.end(), k - 1, 1);
    SkewShape a =
        oplus({SkewShape::straight(Partition(hook)), SkewShape::straight(Partition({1}))});
    std::vector<int> near{n - k, 2};
    near.insert(near.end(), k - 2, 1);
    SkewShape b = SkewShape::straight(Partition(near));
    FiberTable fa = cdes_fibers(a), fb = cdes_fibers(b);
    std::map<Subset, long long> out;
    for (const Subset& J : all_subsets(n)) {
        if (J.is_empty() || J.is_full()) continue;
        out[J] = to_long(fa.at(J) - fb.at(J));
    }
    return out;
}

Word inverse_word(const Word& w) {
    int n = w.size();
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[w.letters[i] - 1] = i + 1;
    Word out;
    out.letters = std::move(inv);
    return out;
}

namespace {

// Greedy lexicographically-least selection of permutations matching the
// cDes fiber counts of a shape; alphabet shifted by `offset`.
std::vector<Word> select_permutation_lift(const FiberTable& ft, int offset) {
    int m = ft.n;
    std::map<Subset, long long> need;
    for (const Subset& J : all_subsets(m)) {
        long long v = to_long(ft.at(J));
        if (v > 0) need[J] = v;
    }
    std::vector<Word> out;
    for (const Word& w : all_permutations(m)) {
        auto it = need.find(cdes_set(w));
        if (it == need.end() || it->second == 0) continue;
        --it->second;
        std::vector<int> xs;
        for (int x : w.letters) xs.push_back(x + offset);
        out.push_back(Word(xs));
    }
    for (const auto& [J, v] : need)
        if (v != 0)
            throw std::runtime_error("not enough permutations with the required cDes fibers");
    return out;
}

}  // namespace

DisconnectedShuffleReport disconnected_shuffle_identity(const Partition& lam,
                                                        const Partition& mu) {
    if (lam.is_hook() || mu.is_hook())
        throw std::invalid_argument("both partitions must be non-hook");
    DisconnectedShuffleReport rep;
    rep.m = lam.total();
    rep.n = mu.total();
    int total = rep.m + rep.n;

    FiberTable flam = cdes_fibers(SkewShape::straight(lam));
    FiberTable fmu = cdes_fibers(SkewShape::straight(mu));
    std::vector<Word> Alam = select_permutation_lift(flam, 0);
    std::vector<Word> Amu = select_permutation_lift(fmu, rep.m);

    FiberTable fsum =
        cdes_fibers(oplus({SkewShape::straight(lam), SkewShape::straight(mu)}));
    for (const Subset& J : all_subsets(total)) {
        long long v = to_long(fsum.at(J));
        if (v != 0) rep.lhs[J] = v;
    }

    std::map<Subset, long long> tally;
    for (const Word& sig : Alam)
        for (const Word& tau : Amu)
            for (const CyclicWord& cw : cyclic_shuffles(CyclicWord(sig), CyclicWord(tau)))
                for (int r = 0; r < total; ++r) ++tally[cdes_set(cw.canonical.rotated(r))];
    long long denom = static_cast<long long>(rep.m) * rep.n;
    bool ok = true;
    for (auto& [J, v] : tally) {
        if (v % denom != 0) ok = false;
        long long q = v / denom;
        if (q != 0) rep.rhs_count[J] = q;
    }
    rep.holds = ok && (rep.lhs == rep.rhs_count);
    return rep;
}

ConjectureReport conjecture_check(int n, const Subset& J) {
    if (J.n != n || J.is_empty() || J.is_full())
        throw std::invalid_argument("need ∅ ⊊ J ⊊ [n]");
    ConjectureReport rep;
    Subset target = cyclic_class(J).canonical;
    std::map<Subset, long long> tally;
    for (const Word& w : all_permutations(n))
        if (cyclic_class(cdes_set(inverse_word(w))).canonical == target)
            ++tally[cdes_set(w)];
    QSym q = QSym::zero(n);
    for (const auto& [K, c] : tally) {
        QSym f = fcyc_as_qsym(n, K);
        f *= Rat(static_cast<long>(c));
        q += f;
    }
    rep.symmetric = is_symmetric(q);
    if (rep.symmetric) {
        rep.expansion = schur_expand(q);
        rep.schur_positive = true;
        for (const auto& [lamb, c] : rep.expansion)
            if (c < 0) rep.schur_positive = false;
    }
    return rep;
}

namespace {

void basic_shapes_rec(int n, int placed, std::vector<int>& lam, std::vector<int>& mu,
                      std::vector<SkewShape>& out) {
    if (placed == n) {
        SkewShape s(lam, mu);
        // no empty columns: the rows must cover 1..lambda[0]
        std::vector<bool> colseen(s.lambda[0], false);
        for (auto [r, c] : s.cell_list()) colseen[c] = true;
        if (std::all_of(colseen.begin(), colseen.end(), [](bool b) { return b; }))
            out.push_back(std::move(s));
        return;
    }
    int maxl = lam.empty() ? n : lam.back();
    int maxm = lam.empty() ? n : mu.back();
    for (int l = 1; l <= maxl; ++l)
        for (int m = 0; m <= std::min(maxm, l - 1); ++m) {
            if (placed + (l - m) > n) continue;
            lam.push_back(l);
            mu.push_back(m);
            basic_shapes_rec(n, placed + (l - m), lam, mu, out);
            lam.pop_back();
            mu.pop_back();
        }
}

}  // namespace

std::vector<SkewShape> all_basic_skew_shapes(int n) {
    std::vector<SkewShape> out;
    std::vector<int> lam, mu;
    basic_shapes_rec(n, 0, lam, mu, out);
    return out;
}

}  // namespace cqsym
