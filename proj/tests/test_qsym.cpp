#include "cqsym/qsym.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace cqsym;

namespace {

QSym random_qsym(int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 3), val(-3, 3);
    QSym f = QSym::zero(degree);
    for (const Subset& J : all_subsets(std::max(degree - 1, 0)))
        if (coin(rng) == 0) f.add_term(J, val(rng));
    if (f.is_zero()) f.add_term(Subset::empty(std::max(degree - 1, 0)), 1);
    return f;
}

}  // namespace

TEST_CASE("monomial and fundamental basics") {
    CHECK(qsym_fundamental(2, Subset::empty(1)) ==
          qsym_monomial(2, Subset::empty(1)) + qsym_monomial(2, Subset::of(1, {1})));
    // e_n is a single monomial term
    QSym e4 = qsym_e(4);
    CHECK(e4.coeffs.size() == 1);
    CHECK(e4.coeff(Subset::full(3)) == 1);
    CHECK_THROWS_AS(qsym_monomial(3, Subset::of(3, {3})), std::invalid_argument);
    // monomial(5,{1,3}) is the M term of composition (1,2,2)
    CHECK(co(Subset::of(4, {1, 3}), 5) == Composition({1, 2, 2}));
}

TEST_CASE("F/M conversion round-trips") {
    for (int n = 0; n <= 10; ++n)
        for (const Subset& J : all_subsets(std::max(n - 1, 0))) {
            QSym f = qsym_fundamental(n, J);
            auto fc = to_fundamental(f);
            REQUIRE(fc.size() == 1);
            CHECK(fc.begin()->first == J);
            CHECK(fc.begin()->second == 1);
        }
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QSym f = random_qsym(5, rng);
        CHECK(from_fundamental(5, to_fundamental(f)) == f);
    }
}

TEST_CASE("product of fundamentals via shuffles") {
    // F_{1,∅}·F_{1,∅} = F_{2,∅} + F_{2,{1}}
    QSym lhs = multiply(qsym_h(1), qsym_h(1));
    CHECK(lhs == qsym_fundamental(2, Subset::empty(1)) + qsym_fundamental(2, Subset::of(1, {1})));

    // F_{3,Des u}·F_{2,Des v} = Σ_{w ∈ u⧢v} F_{5,Des w}
    Word u({3, 1, 2}), v({5, 4});
    QSym prod = multiply(qsym_fundamental(3, des_set(u)), qsym_fundamental(2, des_set(v)));
    QSym byshuffle = QSym::zero(5);
    for (const Word& w : shuffles(u, v))
        byshuffle += qsym_fundamental(5, des_set(w));
    CHECK(prod == byshuffle);
}

TEST_CASE("shuffle product theorem, exhaustive over descent classes") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; a + b <= 7; ++b)
            for (const Subset& I : all_subsets(a - 1))
                for (const Subset& K : all_subsets(b - 1)) {
                    Word u, v;
                    for (const Word& w : all_permutations(a))
                        if (des_set(w) == I) {
                            u = w;
                            break;
                        }
                    for (const Word& w : all_permutations(b))
                        if (des_set(w) == K) {
                            std::vector<int> xs;
                            for (int x : w.letters) xs.push_back(x + a);
                            v = Word(xs);
                            break;
                        }
                    QSym prod = multiply(qsym_fundamental(a, I), qsym_fundamental(b, K));
                    QSym rhs = QSym::zero(a + b);
                    for (const Word& w : shuffles(u, v))
                        rhs += qsym_fundamental(a + b, des_set(w));
                    CHECK(prod == rhs);
                }
}

TEST_CASE("multiply is commutative and associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        QSym f = random_qsym(2, rng), g = random_qsym(3, rng), h = random_qsym(2, rng);
        CHECK(multiply(f, g) == multiply(g, f));
        CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        CHECK(multiply(QSym::one(), f) == f);
    }
}

TEST_CASE("expand_truncated basics") {
    TruncPoly p = expand_truncated(qsym_monomial(2, Subset::of(1, {1})), 2);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.at({1, 1}) == 1);

    TruncPoly h2 = expand_truncated(qsym_h(2), 2);
    CHECK(h2.terms.size() == 3);
    CHECK(h2.terms.at({2, 0}) == 1);
    CHECK(h2.terms.at({1, 1}) == 1);
    CHECK(h2.terms.at({0, 2}) == 1);
}

TEST_CASE("expand_truncated is a ring map") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 6; ++trial) {
        QSym f = random_qsym(3, rng), g = random_qsym(3, rng);
        CHECK(expand_truncated(multiply(f, g), 6) ==
              tp_mul(expand_truncated(f, 6), expand_truncated(g, 6)));
    }
}

TEST_CASE("faithfulness of truncation at k >= n") {
    int n = 4;
    std::vector<TruncPoly> seen;
    for (const Subset& J : all_subsets(n - 1)) {
        TruncPoly p = expand_truncated(qsym_monomial(n, J), n);
        for (const TruncPoly& q : seen) CHECK(!(p == q));
        seen.push_back(std::move(p));
    }
}

TEST_CASE("is_symmetric") {
    CHECK(is_symmetric(qsym_h(5)));
    CHECK(is_symmetric(qsym_e(4)));
    CHECK(!is_symmetric(qsym_fundamental(3, Subset::of(2, {1}))));
    CHECK(is_symmetric(QSym::one()));
}

TEST_CASE("inner_h") {
    CHECK(inner_h(qsym_h(4), Partition({4})) == 1);
    CHECK(inner_h(qsym_e(2), Partition({1, 1})) == 1);
    CHECK(inner_h(qsym_e(2), Partition({2})) == 0);
    // s_{2,1} = F_{3,{1}} + F_{3,{2}} = m_{21} + 2 m_{111}
    QSym s21 = qsym_fundamental(3, Subset::of(2, {1})) + qsym_fundamental(3, Subset::of(2, {2}));
    CHECK(inner_h(s21, Partition({2, 1})) == 1);
    CHECK(inner_h(s21, Partition({1, 1, 1})) == 2);
    CHECK_THROWS_AS(inner_h(qsym_fundamental(3, Subset::of(2, {1})), Partition({2, 1})),
                    std::domain_error);
}

TEST_CASE("inner_h is linear and matches truncated extraction") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        QSym f = QSym::zero(4);
        std::uniform_int_distribution<int> val(-2, 2);
        for (const Partition& lam : partitions_of(4)) {
            QSym hl = qsym_h(Composition(lam.parts));
            hl *= val(rng);
            f += hl;
        }
        REQUIRE(is_symmetric(f));
        TruncPoly p = expand_truncated(f, 4);
        for (const Partition& lam : partitions_of(4)) {
            std::vector<int> e(4, 0);
            for (int i = 0; i < lam.length(); ++i) e[i] = lam.parts[i];
            auto it = p.terms.find(e);
            Rat fromtp = it == p.terms.end() ? Rat(0) : it->second;
            CHECK(inner_h(f, lam) == fromtp);
        }
    }
}

TEST_CASE("omega on qsym") {
    CHECK(qsym_omega(qsym_h(4)) == qsym_e(4));
    CHECK(qsym_omega(qsym_e(5)) == qsym_h(5));
    std::mt19937 rng(19);
    for (int trial = 0; trial < 6; ++trial) {
        QSym f = random_qsym(4, rng);
        CHECK(qsym_omega(qsym_omega(f)) == f);
    }
    QSym f = random_qsym(2, rng), g = random_qsym(3, rng);
    CHECK(qsym_omega(multiply(f, g)) == multiply(qsym_omega(f), qsym_omega(g)));
}

TEST_CASE("partitions and conjugates") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(7).size() == 15);
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition({4}).is_hook());
    CHECK(Partition({2, 1, 1}).is_hook());
    CHECK(!Partition({2, 2}).is_hook());
    for (const Partition& lam : partitions_of(6))
        CHECK(lam.conjugate().conjugate() == lam);
}
