#include "cqsym/toric.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace cqsym {

namespace {

// reflexive-transitive reachability, indexed by position in verts
std::vector<std::vector<bool>> reach_matrix(const Dag& d) {
    int n = d.size();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[d.verts[i]] = i;
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (auto [a, b] : d.arcs) r[idx[a]][idx[b]] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (r[i][k])
                for (int j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

bool has_cycle(const std::vector<int>& verts, const std::set<std::pair<int, int>>& arcs) {
    std::map<int, int> idx;
    int n = static_cast<int>(verts.size());
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    std::vector<std::vector<int>> adj(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : arcs) {
        adj[idx.at(a)].push_back(idx.at(b));
        ++indeg[idx.at(b)];
    }
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    int seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++seen;
        for (int w : adj[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return seen != n;
}

}  // namespace

Dag::Dag(std::vector<int> vertices, std::set<std::pair<int, int>> arc_set)
    : verts(std::move(vertices)), arcs(std::move(arc_set)) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("duplicate vertex labels");
    for (auto [a, b] : arcs) {
        if (!has_vertex(a) || !has_vertex(b)) throw std::invalid_argument("arc endpoint not a vertex");
        if (a == b) throw std::invalid_argument("loop arc");
    }
    if (has_cycle(verts, arcs)) throw std::invalid_argument("relation has a directed cycle");
}

bool Dag::has_vertex(int v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool Dag::is_source(int v) const {
    for (auto [a, b] : arcs)
        if (b == v) return false;
    return true;
}

bool Dag::is_sink(int v) const {
    for (auto [a, b] : arcs)
        if (a == v) return false;
    return true;
}

Dag transitive_closure(const Dag& d) {
    auto r = reach_matrix(d);
    int n = d.size();
    std::set<std::pair<int, int>> arcs = d.arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && r[i][j]) arcs.insert({d.verts[i], d.verts[j]});
    return Dag(d.verts, std::move(arcs));
}

Dag toric_transitive_closure(const Dag& d) {
    // u -> w is implied iff some direct arrow x -> y admits a chain
    // x ~> u -> ... -> w ~> y; with reachability R that reads
    // R[u][w], u != w, and R[x][u] && R[w][y] for some arc (x,y).
    auto r = reach_matrix(d);
    int n = d.size();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[d.verts[i]] = i;
    std::set<std::pair<int, int>> arcs = d.arcs;
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w || !r[u][w]) continue;
            bool implied = false;
            for (auto [x, y] : d.arcs)
                if (r[idx[x]][u] && r[w][idx[y]]) {
                    implied = true;
                    break;
                }
            if (implied) arcs.insert({d.verts[u], d.verts[w]});
        }
    return Dag(d.verts, std::move(arcs));
}

bool is_toric_closed(const Dag& d) { return toric_transitive_closure(d) == d; }

Dag flip(const Dag& d, int v) {
    if (!d.has_vertex(v)) throw std::invalid_argument("flip at unknown vertex");
    if (!d.is_source(v) && !d.is_sink(v))
        throw std::invalid_argument("flip vertex is neither source nor sink");
    std::set<std::pair<int, int>> arcs;
    for (auto [a, b] : d.arcs) {
        if (a == v || b == v)
            arcs.insert({b, a});
        else
            arcs.insert({a, b});
    }
    return Dag(d.verts, std::move(arcs));
}

ToricClass toric_class(const Dag& d, std::size_t cap) {
    std::set<Dag> seen;
    std::queue<Dag> work;
    seen.insert(d);
    work.push(d);
    while (!work.empty()) {
        Dag cur = std::move(work.front());
        work.pop();
        for (int v : cur.verts) {
            if (!cur.is_source(v) && !cur.is_sink(v)) continue;
            Dag next = flip(cur, v);
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::length_error("toric class exceeds the size cap");
                work.push(next);
            }
        }
    }
    ToricClass t;
    t.members.assign(seen.begin(), seen.end());
    return t;
}

Dag total_order_dag(const Word& w) {
    std::set<std::pair<int, int>> arcs;
    for (int i = 0; i < w.size(); ++i)
        for (int j = i + 1; j < w.size(); ++j) arcs.insert({w.letters[i], w.letters[j]});
    return Dag(w.letters, std::move(arcs));
}

Dag disjoint_union(const Dag& a, const Dag& b) {
    std::vector<int> verts = a.verts;
    verts.insert(verts.end(), b.verts.begin(), b.verts.end());
    std::set<std::pair<int, int>> arcs = a.arcs;
    arcs.insert(b.arcs.begin(), b.arcs.end());
    return Dag(std::move(verts), std::move(arcs));
}

namespace {

void lext_rec(const Dag& d, std::vector<int>& placed, std::set<int>& used,
              std::vector<Word>& out) {
    if (static_cast<int>(placed.size()) == d.size()) {
        Word w;
        w.letters = placed;
        out.push_back(std::move(w));
        return;
    }
    for (int v : d.verts) {
        if (used.count(v)) continue;
        bool ready = true;
        for (auto [a, b] : d.arcs)
            if (b == v && !used.count(a)) {
                ready = false;
                break;
            }
        if (!ready) continue;
        placed.push_back(v);
        used.insert(v);
        lext_rec(d, placed, used, out);
        used.erase(v);
        placed.pop_back();
    }
}

}  // namespace

std::vector<Word> linear_extensions(const Dag& d) {
    std::vector<Word> out;
    std::vector<int> placed;
    std::set<int> used;
    lext_rec(d, placed, used, out);
    return out;
}

std::vector<CyclicWord> toric_extensions(const ToricClass& t) {
    std::set<CyclicWord> classes;
    for (const Dag& m : t.members)
        for (const Word& w : linear_extensions(m)) classes.insert(CyclicWord(w));
    return {classes.begin(), classes.end()};
}

std::vector<CyclicWord> toric_extensions(const Dag& d) {
    return toric_extensions(toric_class(d));
}

bool torically_extends_class(const CyclicWord& w, const ToricClass& t) {
    for (const Dag& m : t.members)
        for (int r = 0; r < w.size(); ++r) {
            Word wr = w.canonical.rotated(r);
            std::map<int, int> pos;
            for (int i = 0; i < wr.size(); ++i) pos[wr.letters[i]] = i;
            bool ok = true;
            for (auto [a, b] : m.arcs)
                if (pos.at(a) > pos.at(b)) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    return false;
}

std::set<std::vector<int>> d_partitions(const Dag& d, int N) {
    if (N < 1) throw std::invalid_argument("d_partitions needs N >= 1");
    int n = d.size();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[d.verts[i]] = i;
    std::set<std::vector<int>> out;
    std::vector<int> f(n, 1);
    while (true) {
        bool ok = true;
        for (auto [a, b] : d.arcs) {
            int fa = f[idx[a]], fb = f[idx[b]];
            if (fa > fb || (fa == fb && a > b)) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(f);
        int i = n - 1;
        while (i >= 0 && f[i] == N) {
            f[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

std::set<std::vector<int>> toric_partitions(const ToricClass& t, int N) {
    std::set<std::vector<int>> out;
    for (const Dag& m : t.members) {
        auto part = d_partitions(m, N);
        out.insert(part.begin(), part.end());
    }
    return out;
}

QSym toric_enumerator(const ToricClass& t) {
    int n = t.canonical().size();
    QSym out = QSym::zero(n);
    for (const CyclicWord& w : toric_extensions(t))
        out += fcyc_as_qsym(n, cdes_set(w.canonical));
    return out;
}

TruncPoly partitions_genfun(const ToricClass& t, int k) {
    TruncPoly p;
    p.k = k;
    for (const std::vector<int>& f : toric_partitions(t, k)) {
        std::vector<int> e(k, 0);
        for (int v : f) ++e[v - 1];
        p.add_term(e, 1);
    }
    return p;
}

}  // namespace cqsym
