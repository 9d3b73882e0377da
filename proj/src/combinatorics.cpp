#include "cqsym/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cqsym {

Subset::Subset(int ambient, std::vector<int> sorted_elems)
    : n(ambient), elems(std::move(sorted_elems)) {
    if (n < 0) throw std::invalid_argument("negative ambient size");
    int prev = 0;
    for (int x : elems) {
        if (x <= prev || x > n) throw std::invalid_argument("subset element out of range or unsorted");
        prev = x;
    }
}

Subset Subset::of(int ambient, std::initializer_list<int> xs) {
    std::vector<int> v(xs);
    std::sort(v.begin(), v.end());
    return Subset(ambient, std::move(v));
}

Subset Subset::full(int ambient) {
    std::vector<int> v(ambient);
    std::iota(v.begin(), v.end(), 1);
    return Subset(ambient, std::move(v));
}

bool Subset::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

bool Subset::subset_of(const Subset& other) const {
    return std::includes(other.elems.begin(), other.elems.end(), elems.begin(), elems.end());
}

Subset Subset::shifted(int i) const {
    if (n == 0) return *this;
    std::vector<int> v;
    v.reserve(elems.size());
    for (int x : elems) {
        int y = (x - 1 + i) % n;
        if (y < 0) y += n;
        v.push_back(y + 1);
    }
    std::sort(v.begin(), v.end());
    return Subset(n, std::move(v));
}

Subset Subset::complement() const {
    std::vector<int> v;
    v.reserve(n - elems.size());
    for (int x = 1; x <= n; ++x)
        if (!contains(x)) v.push_back(x);
    return Subset(n, std::move(v));
}

Subset Subset::restricted(int m) const {
    std::vector<int> v;
    for (int x : elems)
        if (x <= m) v.push_back(x);
    return Subset(m, std::move(v));
}

Subset Subset::with_ambient(int m) const {
    return Subset(m, elems);
}

std::uint64_t Subset::mask() const {
    std::uint64_t b = 0;
    for (int x : elems) b |= (std::uint64_t{1} << (x - 1));
    return b;
}

CyclicClass cyclic_class(const Subset& J) {
    CyclicClass c;
    c.n = J.n;
    if (J.n == 0) {
        c.canonical = J;
        c.orbit_size = 1;
        c.stabilizer = 1;  // degree-0 convention; d·#A = n holds only for n >= 1
        return c;
    }
    std::set<Subset> orbit;
    for (int i = 0; i < J.n; ++i) orbit.insert(J.shifted(i));
    c.canonical = *orbit.begin();
    c.orbit_size = static_cast<int>(orbit.size());
    c.stabilizer = J.n / c.orbit_size;
    return c;
}

std::vector<CyclicClass> all_cyclic_classes(int n) {
    std::set<Subset> seen;
    std::vector<CyclicClass> out;
    for (const Subset& J : all_subsets(n)) {
        if (J.is_empty()) continue;
        CyclicClass c = cyclic_class(J);
        if (seen.insert(c.canonical).second) out.push_back(c);
    }
    return out;
}

std::vector<CyclicClass> proper_cyclic_classes(int n) {
    std::vector<CyclicClass> out;
    for (CyclicClass& c : all_cyclic_classes(n))
        if (c.rank() < n) out.push_back(std::move(c));
    return out;
}

long long count_cyclic_classes(int n) {
    if (n < 1) throw std::invalid_argument("count_cyclic_classes needs n >= 1");
    auto phi = [](int d) {
        int r = d;
        for (int p = 2; p * p <= d; ++p) {
            if (d % p == 0) {
                r -= r / p;
                while (d % p == 0) d /= p;
            }
        }
        if (d > 1) r -= r / d;
        return r;
    };
    long long total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += static_cast<long long>(phi(d)) << (n / d);
    return total / n - 1;
}

int d_AB(const CyclicClass& A, const CyclicClass& B) {
    if (A.n != B.n) throw std::invalid_argument("d_AB over mismatched n");
    int count = 0;
    for (int i = 0; i < A.n; ++i)
        if (A.canonical.subset_of(B.canonical.shifted(i))) ++count;
    return count;
}

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Composition Composition::rotated(int k) const {
    if (parts.empty()) return *this;
    int t = length();
    k = ((k % t) + t) % t;
    std::vector<int> v;
    v.reserve(t);
    for (int i = 0; i < t; ++i) v.push_back(parts[(i + k) % t]);
    return Composition(std::move(v));
}

Composition cc(const Subset& J) {
    if (J.is_empty()) throw std::invalid_argument("cc(∅) is undefined");
    int t = J.size();
    std::vector<int> parts;
    parts.reserve(t);
    for (int k = 0; k + 1 < t; ++k) parts.push_back(J.elems[k + 1] - J.elems[k]);
    parts.push_back(J.elems[0] - J.elems[t - 1] + J.n);
    return Composition(std::move(parts));
}

Composition co(const Subset& J, int n) {
    for (int x : J.elems)
        if (x >= n) throw std::invalid_argument("co requires J ⊆ [n-1]");
    if (n == 0) return Composition();  // the empty composition of 0
    std::vector<int> parts;
    int prev = 0;
    for (int x : J.elems) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

Subset descents_of_composition(const Composition& c) {
    int n = c.total();
    std::vector<int> v;
    int run = 0;
    for (int i = 0; i + 1 < c.length(); ++i) {
        run += c.parts[i];
        v.push_back(run);
    }
    return Subset(std::max(n - 1, 0), std::move(v));
}

Word::Word(std::vector<int> xs) : letters(std::move(xs)) {
    std::vector<int> s = letters;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("word letters must be distinct");
}

Word Word::rotated(int k) const {
    if (letters.empty()) return *this;
    int a = size();
    k = ((k % a) + a) % a;
    std::vector<int> v;
    v.reserve(a);
    for (int i = 0; i < a; ++i) v.push_back(letters[(i + k) % a]);
    Word w;
    w.letters = std::move(v);
    return w;
}

Subset des_set(const Word& w) {
    int a = w.size();
    std::vector<int> v;
    for (int i = 0; i + 1 < a; ++i)
        if (w.letters[i] > w.letters[i + 1]) v.push_back(i + 1);
    return Subset(std::max(a - 1, 0), std::move(v));
}

Subset cdes_set(const Word& w) {
    int a = w.size();
    if (a <= 1) return Subset(a, {});
    std::vector<int> v;
    for (int i = 0; i < a; ++i)
        if (w.letters[i] > w.letters[(i + 1) % a]) v.push_back(i + 1);
    return Subset(a, std::move(v));
}

CyclicWord::CyclicWord(const Word& w) {
    if (w.size() == 0) {
        canonical = w;
        return;
    }
    auto it = std::min_element(w.letters.begin(), w.letters.end());
    canonical = w.rotated(static_cast<int>(it - w.letters.begin()));
}

namespace {

void shuffle_rec(const std::vector<int>& u, std::size_t i, const std::vector<int>& v,
                 std::size_t j, std::vector<int>& cur, std::vector<Word>& out) {
    if (i == u.size() && j == v.size()) {
        Word w;
        w.letters = cur;
        out.push_back(std::move(w));
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
}

void check_disjoint(const Word& u, const Word& v) {
    std::set<int> s(u.letters.begin(), u.letters.end());
    for (int x : v.letters)
        if (s.count(x)) throw std::invalid_argument("word supports must be disjoint");
}

}  // namespace

std::vector<Word> shuffles(const Word& u, const Word& v) {
    check_disjoint(u, v);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(binomial(u.size() + v.size(), u.size())));
    std::vector<int> cur;
    shuffle_rec(u.letters, 0, v.letters, 0, cur, out);
    return out;
}

std::vector<CyclicWord> cyclic_shuffles(const CyclicWord& cu, const CyclicWord& cv) {
    const Word& u = cu.canonical;
    const Word& v = cv.canonical;
    if (u.size() == 0 || v.size() == 0)
        throw std::invalid_argument("cyclic shuffle of an empty word");
    check_disjoint(u, v);
    int a = u.size(), b = v.size();

    // Anchor every class at u_1: each class has exactly one representative
    // starting with u_1, of the form u_1 (slot_1) u_2 (slot_2) ... u_a (slot_a)
    // with the v-letters, in some rotation, distributed over the a slots.
    std::vector<CyclicWord> out;
    std::vector<int> slot(a, 0);
    for (int rot = 0; rot < b; ++rot) {
        Word vr = v.rotated(rot);
        // weak compositions of b into a parts
        std::fill(slot.begin(), slot.end(), 0);
        slot[0] = b;
        while (true) {
            std::vector<int> w;
            w.reserve(a + b);
            int pos = 0;
            for (int i = 0; i < a; ++i) {
                w.push_back(u.letters[i]);
                for (int s = 0; s < slot[i]; ++s) w.push_back(vr.letters[pos++]);
            }
            Word ww;
            ww.letters = std::move(w);
            out.emplace_back(ww);
            // next weak composition
            int i = a - 1;
            while (i > 0 && slot[i - 1] == 0) --i;
            if (i == 0) break;
            --slot[i - 1];
            int rest = 1;
            for (int k = i; k < a; ++k) {
                rest += slot[k];
                slot[k] = 0;
            }
            slot[i] = rest;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subset> all_subsets(int n) {
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (m & (std::uint64_t{1} << i)) v.push_back(i + 1);
        out.emplace_back(n, std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    do {
        Word w;
        w.letters = p;
        out.push_back(std::move(w));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Word identity_word(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    Word w;
    w.letters = std::move(p);
    return w;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

long long binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

}  // namespace cqsym
