#pragma once

#include <json.hpp>
#include <string>

#include "cqsym/descent.hpp"
#include "cqsym/enumer.hpp"
#include "cqsym/schur.hpp"
#include "cqsym/toric.hpp"

namespace cqsym {

using Json = nlohmann::ordered_json;

// Textual forms: subset "{1,3,5}" (ambient from context) or "{1,3,5}/7",
// composition/partition/word "(3,1,2)", DAG "4;1->2,2->3".
Subset parse_subset(const std::string& s, int ambient);
Subset parse_subset_full(const std::string& s);  // requires the "/n" suffix
Partition parse_partition(const std::string& s);
Word parse_word(const std::string& s);
Dag parse_dag(const std::string& s);

std::string format_subset(const Subset& J);  // "{1,3}/6"
std::string format_word(const Word& w);
std::string format_composition(const Composition& c);

Json subset_json(const Subset& J);

// {"n":…, "basis":"M"|"F", "terms":[{"set":[…],"coeff":"p/q"},…]}
Json qsym_json(const QSym& f, bool fundamental_basis);
// {"n":…, "basis":"hMcyc"|"hFcyc", "terms":[{"class":[…],"coeff":"p/q"},…]}
Json cqsym_json(const CQSym& e);
// {"R":…, "coeffs":["p/q",…]}
Json qpoly_json(const QPoly& p);
// {"n":…, "terms":[{"perm":[…],"coeff":…},…]}
Json permsum_json(const PermSum& s);
Json fiber_table_json(const FiberTable& t);

}  // namespace cqsym
