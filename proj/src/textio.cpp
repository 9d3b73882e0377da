#include "cqsym/textio.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cqsym {

namespace {

std::vector<int> parse_int_list(const std::string& body) {
    std::vector<int> out;
    std::string cur;
    for (char ch : body) {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) {
                out.push_back(std::stoi(cur));
                cur.clear();
            }
        } else if ((ch >= '0' && ch <= '9') || ch == '-') {
            cur.push_back(ch);
        } else {
            throw std::invalid_argument("unexpected character in list: " + body);
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

std::string strip(const std::string& s, char open, char close, const char* what) {
    std::size_t a = s.find(open), b = s.rfind(close);
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw std::invalid_argument(std::string("malformed ") + what + ": " + s);
    return s.substr(a + 1, b - a - 1);
}

}  // namespace

Subset parse_subset(const std::string& s, int ambient) {
    std::string body = s;
    std::size_t slash = s.find('/');
    if (slash != std::string::npos) {
        int n = std::stoi(s.substr(slash + 1));
        if (n != ambient)
            throw std::invalid_argument("subset ambient size disagrees with context");
        body = s.substr(0, slash);
    }
    std::vector<int> xs = parse_int_list(strip(body, '{', '}', "subset"));
    std::sort(xs.begin(), xs.end());
    return Subset(ambient, std::move(xs));
}

Subset parse_subset_full(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("subset needs an ambient size: " + s);
    int n = std::stoi(s.substr(slash + 1));
    return parse_subset(s.substr(0, slash), n);
}

Partition parse_partition(const std::string& s) {
    return Partition(parse_int_list(strip(s, '(', ')', "partition")));
}

Word parse_word(const std::string& s) {
    return Word(parse_int_list(strip(s, '(', ')', "word")));
}

Dag parse_dag(const std::string& s) {
    std::size_t semi = s.find(';');
    std::string head = (semi == std::string::npos) ? s : s.substr(0, semi);
    int n = std::stoi(head);
    if (n < 1) throw std::invalid_argument("DAG needs at least one vertex");
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    std::set<std::pair<int, int>> arcs;
    if (semi != std::string::npos) {
        std::string rest = s.substr(semi + 1);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            std::size_t arrow = item.find("->");
            if (arrow == std::string::npos)
                throw std::invalid_argument("malformed arc: " + item);
            int a = std::stoi(item.substr(0, arrow));
            int b = std::stoi(item.substr(arrow + 2));
            arcs.insert({a, b});
        }
    }
    return Dag(std::move(verts), std::move(arcs));
}

std::string format_subset(const Subset& J) {
    std::string out = "{";
    for (std::size_t i = 0; i < J.elems.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(J.elems[i]);
    }
    out += "}/" + std::to_string(J.n);
    return out;
}

std::string format_word(const Word& w) {
    std::string out = "(";
    for (int i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.letters[i]);
    }
    return out + ")";
}

std::string format_composition(const Composition& c) {
    std::string out = "(";
    for (int i = 0; i < c.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(c.parts[i]);
    }
    return out + ")";
}

Json subset_json(const Subset& J) { return Json(J.elems); }

Json qsym_json(const QSym& f, bool fundamental_basis) {
    Json terms = Json::array();
    if (fundamental_basis) {
        for (const auto& [J, c] : to_fundamental(f))
            terms.push_back({{"set", J.elems}, {"coeff", rat_str(c)}});
    } else {
        for (const auto& [J, c] : f.coeffs)
            terms.push_back({{"set", J.elems}, {"coeff", rat_str(c)}});
    }
    return Json{{"n", f.degree}, {"basis", fundamental_basis ? "F" : "M"}, {"terms", terms}};
}

Json cqsym_json(const CQSym& e) {
    Json terms = Json::array();
    for (const auto& [rep, c] : e.coeffs)
        terms.push_back({{"class", rep.elems}, {"coeff", rat_str(c)}});
    return Json{{"n", e.degree},
                {"basis", e.basis == CBasis::hMcyc ? "hMcyc" : "hFcyc"},
                {"terms", terms}};
}

Json qpoly_json(const QPoly& p) {
    Json coeffs = Json::array();
    for (const Rat& c : p.coeff) coeffs.push_back(rat_str(c));
    return Json{{"R", p.trunc}, {"coeffs", coeffs}};
}

Json permsum_json(const PermSum& s) {
    Json terms = Json::array();
    for (const auto& [w, c] : s.terms) terms.push_back({{"perm", w.letters}, {"coeff", c}});
    return Json{{"n", s.n}, {"terms", terms}};
}

Json fiber_table_json(const FiberTable& t) {
    Json fibers = Json::array();
    for (const auto& [rep, c] : t.fibers)
        fibers.push_back({{"class", rep.elems}, {"coeff", rat_str(c)}});
    return Json{{"n", t.n}, {"proper", t.proper}, {"tableaux", t.tableaux}, {"fibers", fibers}};
}

}  // namespace cqsym
