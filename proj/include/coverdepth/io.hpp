// JSON text formats for hypergraphs, monomial ideals, complexes and
// edge-split systems, plus report serialization (canonical JSON and CSV).
// All object keys serialize alphabetically, so equal values give equal bytes.

#ifndef COVERDEPTH_IO_HPP
#define COVERDEPTH_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "coverdepth/polytope.hpp"
#include "coverdepth/simplicial.hpp"
#include "coverdepth/stability.hpp"

namespace coverdepth {

// {"n": 3, "edges": [[1,2],[2,3]]}; edges serialize sorted internally, the
// edge list keeps input order. Extra keys (e.g. "id") are ignored on input.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Hypergraph& h);

// [[0,1,0],[1,0,1]] lists generator exponent vectors.
MonomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MonomialIdeal& i);

// {"n": 3, "facets": [[1],[3]], "void": false}
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SimplicialComplex& d);

// Hypergraph keys plus "upper" (1-based edge indices) and "t".
EdgeSplitSystem system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EdgeSplitSystem& s);

// Canonical report object; excludes wall-clock timing by design.
nlohmann::json to_json(const DepthReport& r);

// One row per power t:
// instance,n,m,balanced,char,t,depth,dstab,spread,nonincreasing,
// dstab_within_n,limit_matches,ntf_holds
std::string reports_to_csv(const std::vector<DepthReport>& reports);

std::string rational_to_string(const Rational& q);

nlohmann::json parse_json_file(const std::string& path);
nlohmann::json parse_json_text(const std::string& text);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace coverdepth

#endif
