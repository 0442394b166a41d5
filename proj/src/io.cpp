#include "coverdepth/io.hpp"

#include <fstream>
#include <sstream>

#include "coverdepth/errors.hpp"
#include "coverdepth/rng.hpp"

namespace coverdepth {

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    Hypergraph h;
    h.n = j.at("n").get<int>();
    for (const auto& edge : j.at("edges"))
      h.edges.push_back(set_from_vector(edge.get<std::vector<int>>()));
    validate(h);
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad hypergraph document: ") + e.what());
  }
}

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["n"] = h.n;
  j["edges"] = nlohmann::json::array();
  for (VertexSet e : h.edges) j["edges"].push_back(set_to_vector(e));
  return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  try {
    std::vector<Monomial> gens;
    int n = -1;
    for (const auto& row : j) {
      Monomial m;
      m.e = row.get<std::vector<int>>();
      for (int x : m.e)
        if (x < 0) throw ParseError("negative exponent in ideal document");
      if (n < 0) n = m.ambient();
      gens.push_back(std::move(m));
    }
    if (n < 0) throw ParseError("ideal document needs at least one generator");
    return minimalize(n, std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ideal document: ") + e.what());
  }
}

nlohmann::json to_json(const MonomialIdeal& i) {
  nlohmann::json j = nlohmann::json::array();
  for (const Monomial& g : i.gens) j.push_back(g.e);
  return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    if (j.value("void", false)) return complex_from_facets(n, {});
    std::vector<VertexSet> facets;
    for (const auto& f : j.at("facets"))
      facets.push_back(set_from_vector(f.get<std::vector<int>>()));
    return complex_from_facets(n, std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad complex document: ") + e.what());
  }
}

nlohmann::json to_json(const SimplicialComplex& d) {
  nlohmann::json j;
  j["n"] = d.vertex_count;
  j["void"] = d.void_complex();
  j["facets"] = nlohmann::json::array();
  for (VertexSet f : d.facets) j["facets"].push_back(set_to_vector(f));
  return j;
}

EdgeSplitSystem system_from_json(const nlohmann::json& j) {
  try {
    EdgeSplitSystem s;
    s.h = hypergraph_from_json(j);
    if (j.contains("t")) s.t = j.at("t").get<int>();
    if (j.contains("upper"))
      for (const auto& idx : j.at("upper")) {
        int e = idx.get<int>();
        if (e < 1 || e > static_cast<int>(s.h.edges.size()))
          throw ParseError("upper edge index out of range");
        s.upper_edges |= 1u << (e - 1);
      }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad system document: ") + e.what());
  }
}

nlohmann::json to_json(const EdgeSplitSystem& s) {
  nlohmann::json j = to_json(s.h);
  j["t"] = s.t;
  j["upper"] = nlohmann::json::array();
  for (std::size_t e = 0; e < s.h.edges.size(); ++e)
    if (s.upper_edges >> e & 1) j["upper"].push_back(static_cast<int>(e) + 1);
  return j;
}

nlohmann::json to_json(const DepthReport& r) {
  nlohmann::json j;
  nlohmann::json instance = to_json(r.h);
  j["analytic_spread"] = r.analytic_spread_value;
  j["balanced"] = r.balanced;
  j["char"] = r.field_char;
  j["depth"] = nlohmann::json::array();
  for (const auto& [t, d] : r.depth_values)
    j["depth"].push_back(nlohmann::json::array({t, d}));
  if (r.dstab)
    j["dstab"] = *r.dstab;
  else
    j["dstab"] = nullptr;
  j["edges"] = instance["edges"];
  j["id"] = r.id;
  j["input_hash"] = hex64(fnv1a64(instance.dump()));
  j["limit_depth"] = r.limit_depth;
  j["m"] = static_cast<int>(r.h.edges.size());
  j["n"] = r.h.n;
  if (r.ntf_witness)
    j["ntf_witness"] = r.ntf_witness->e;
  else
    j["ntf_witness"] = nullptr;
  j["ntf_witness_s"] = r.ntf_witness_s;
  j["s_ntf_max"] = r.s_ntf_max;
  j["t_max"] = r.t_max;
  j["verdicts"] = {
      {"dstab_within_n", r.verdicts.dstab_within_n},
      {"limit_matches", r.verdicts.limit_matches},
      {"nonincreasing", r.verdicts.nonincreasing},
      {"ntf_holds", r.verdicts.ntf_holds},
  };
  return j;
}

std::string reports_to_csv(const std::vector<DepthReport>& reports) {
  std::ostringstream out;
  out << "instance,n,m,balanced,char,t,depth,dstab,spread,nonincreasing,"
         "dstab_within_n,limit_matches,ntf_holds\n";
  for (const DepthReport& r : reports) {
    std::string dstab_text =
        r.dstab ? std::to_string(*r.dstab) : std::string("UNRESOLVED");
    for (const auto& [t, d] : r.depth_values) {
      out << r.id << ',' << r.h.n << ',' << r.h.edges.size() << ','
          << (r.balanced ? "true" : "false") << ',' << r.field_char << ',' << t
          << ',' << d << ',' << dstab_text << ',' << r.analytic_spread_value
          << ',' << (r.verdicts.nonincreasing ? "true" : "false") << ','
          << (r.verdicts.dstab_within_n ? "true" : "false") << ','
          << (r.verdicts.limit_matches ? "true" : "false") << ','
          << (r.verdicts.ntf_holds ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace coverdepth
