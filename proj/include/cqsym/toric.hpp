#pragma once

#include <set>
#include <utility>

#include "cqsym/cqsym.hpp"

namespace cqsym {

// Directed acyclic relation on an arbitrary finite set of integer labels.
struct Dag {
    std::vector<int> verts;                 // sorted distinct labels
    std::set<std::pair<int, int>> arcs;

    Dag() = default;
    Dag(std::vector<int> vertices, std::set<std::pair<int, int>> arc_set);

    int size() const { return static_cast<int>(verts.size()); }
    bool has_vertex(int v) const;
    bool is_source(int v) const;
    bool is_sink(int v) const;

    bool operator==(const Dag& o) const { return verts == o.verts && arcs == o.arcs; }
    bool operator<(const Dag& o) const {
        if (verts != o.verts) return verts < o.verts;
        return arcs < o.arcs;
    }
};

Dag transitive_closure(const Dag& d);

// Adds i_a -> i_b for every chain i_1 -> ... -> i_k carrying the direct
// arrow i_1 -> i_k; a subset of the ordinary closure, and idempotent.
Dag toric_transitive_closure(const Dag& d);

bool is_toric_closed(const Dag& d);

// Reverse all arcs at a source or sink.
Dag flip(const Dag& d, int v);

// Flip-equivalence class, materialized by breadth-first search.
struct ToricClass {
    std::vector<Dag> members;  // sorted; members[0] is the canonical DAG

    int size() const { return static_cast<int>(members.size()); }
    const Dag& canonical() const { return members.front(); }
};

ToricClass toric_class(const Dag& d, std::size_t cap = 100000);

// Total order on the letters of w as a transitive tournament.
Dag total_order_dag(const Word& w);

Dag disjoint_union(const Dag& a, const Dag& b);

// Words on the vertex labels whose total order extends d.
std::vector<Word> linear_extensions(const Dag& d);

// Total cyclic orders torically extending [d]: the union over class members
// of their ordinary linear extensions.
std::vector<CyclicWord> toric_extensions(const Dag& d);
std::vector<CyclicWord> toric_extensions(const ToricClass& t);

// Direct reading of the definition: some member of [d] is contained in the
// total order of some rotation of w.  Used as an oracle for the above.
bool torically_extends_class(const CyclicWord& w, const ToricClass& t);

// Value assignments verts -> {1..N}; vectors are aligned with d.verts.
std::set<std::vector<int>> d_partitions(const Dag& d, int N);
std::set<std::vector<int>> toric_partitions(const ToricClass& t, int N);

// Σ over total cyclic orders of F^cyc_{n, cDes}; a cyclic P-partition
// enumerator.
QSym toric_enumerator(const ToricClass& t);

// Generating function of the partition set with values ≤ k, as an oracle for
// the truncated expansion of the enumerator.
TruncPoly partitions_genfun(const ToricClass& t, int k);

}  // namespace cqsym
