#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cqsym {

// Subset of [n] = {1,...,n}, stored as a strictly increasing list.
struct Subset {
    int n = 0;
    std::vector<int> elems;

    Subset() = default;
    Subset(int ambient, std::vector<int> sorted_elems);
    static Subset of(int ambient, std::initializer_list<int> xs);
    static Subset full(int ambient);
    static Subset empty(int ambient) { return Subset(ambient, {}); }

    int size() const { return static_cast<int>(elems.size()); }
    bool is_empty() const { return elems.empty(); }
    bool is_full() const { return size() == n; }
    bool contains(int x) const;
    bool subset_of(const Subset& other) const;

    Subset shifted(int i) const;         // J + i, cyclically in [n]
    Subset complement() const;           // [n] \ J
    Subset restricted(int m) const;      // J ∩ [m], ambient m
    Subset with_ambient(int m) const;    // same elements, ambient m (must fit)

    std::uint64_t mask() const;          // bit i-1 set iff i ∈ J (needs n <= 63)

    auto operator<=>(const Subset&) const = default;
};

// Rotation orbit of a subset of [n].  canonical is the lexicographically
// smallest member; orbit_size * stabilizer = n.
struct CyclicClass {
    int n = 0;
    Subset canonical;
    int orbit_size = 1;
    int stabilizer = 1;  // d_A

    int rank() const { return canonical.size(); }

    auto operator<=>(const CyclicClass& o) const { return canonical <=> o.canonical; }
    bool operator==(const CyclicClass& o) const { return canonical == o.canonical; }
};

CyclicClass cyclic_class(const Subset& J);

// All orbits of nonempty subsets of [n], sorted by canonical representative.
std::vector<CyclicClass> all_cyclic_classes(int n);

// All orbits of proper nonempty subsets (excludes [∅] and [[n]]).
std::vector<CyclicClass> proper_cyclic_classes(int n);

// #{orbits of nonempty subsets of [n]} by Burnside's count.
long long count_cyclic_classes(int n);

// d_{A,B} = #{i : J ⊆ K+i} for J ∈ A, K ∈ B; positive iff A ≤ B.
int d_AB(const CyclicClass& A, const CyclicClass& B);

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    int total() const;
    int length() const { return static_cast<int>(parts.size()); }
    Composition rotated(int k) const;    // left rotation by k

    auto operator<=>(const Composition&) const = default;
};

// Cyclic gap sequence of a nonempty J ⊆ [n], anchored at min(J).
Composition cc(const Subset& J);

// Bijection between subsets of [n-1] and compositions of n.
Composition co(const Subset& J, int n);
Subset descents_of_composition(const Composition& c);  // inverse of co

// Word with distinct integer letters.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> xs);

    int size() const { return static_cast<int>(letters.size()); }
    Word rotated(int k) const;           // left rotation by k

    auto operator<=>(const Word&) const = default;
};

// Des(w) ⊆ [a-1]; cDes(w) ⊆ [a], with position a a descent when w_a > w_1.
// Words of length <= 1 have cDes = ∅.
Subset des_set(const Word& w);
Subset cdes_set(const Word& w);

// Rotation class of a word; canonical rotation starts at the minimum letter.
struct CyclicWord {
    Word canonical;

    CyclicWord() = default;
    explicit CyclicWord(const Word& w);

    int size() const { return canonical.size(); }

    auto operator<=>(const CyclicWord&) const = default;
};

// All C(a+b, a) interleavings of two words with disjoint supports.
std::vector<Word> shuffles(const Word& u, const Word& v);

// All (a+b-1)!/((a-1)!(b-1)!) cyclic shuffle classes of [u] and [v].
std::vector<CyclicWord> cyclic_shuffles(const CyclicWord& u, const CyclicWord& v);

// Enumeration helpers.
std::vector<Subset> all_subsets(int n);           // subsets of [n], lex sorted
std::vector<Word> all_permutations(int n);        // S_n in lex order
Word identity_word(int n);

long long factorial(int n);
long long binomial(long long a, long long b);     // 0 when b < 0 or b > a

}  // namespace cqsym
