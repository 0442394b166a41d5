#include "coverdepth/corpus.hpp"

#include <algorithm>
#include <filesystem>

#include "coverdepth/errors.hpp"
#include "coverdepth/io.hpp"

namespace coverdepth {

namespace {

std::string two_digits(int v) {
  return (v < 10 ? "0" : "") + std::to_string(v);
}

}  // namespace

std::vector<CorpusInstance> builtin_corpus() {
  std::vector<CorpusInstance> out;
  auto add = [&](const std::string& id, Hypergraph h, bool balanced,
                 int t_max = 0) {
    out.push_back({id, std::move(h), balanced, t_max});
  };

  GenParams p;
  for (int n = 2; n <= 8; ++n) {
    p = {};
    p.n = n;
    p.kind = "path";
    add("path-" + two_digits(n), generate("tree", p, 1), true);
  }
  for (int n : {5, 7}) {
    p = {};
    p.n = n;
    p.kind = "star";
    add("star-" + two_digits(n), generate("tree", p, 1), true);
  }
  for (int n = 4; n <= 8; ++n)
    for (int seed = 1; seed <= 2; ++seed) {
      p = {};
      p.n = n;
      add("tree-n" + two_digits(n) + "-s" + std::to_string(seed),
          generate("tree", p, static_cast<std::uint64_t>(seed)), true);
    }
  for (int n : {4, 6, 8}) {
    p = {};
    p.n = n;
    add("cycle-" + two_digits(n), generate("even_cycle", p, 1), true);
  }
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    p = {};
    p.part_a = a;
    p.part_b = b;
    p.density = 1.0;
    add("kbip-" + std::to_string(a) + std::to_string(b),
        generate("bipartite", p, 1), true);
  }
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}})
    for (int pct : {40, 60, 80}) {
      p = {};
      p.part_a = a;
      p.part_b = b;
      p.density = pct / 100.0;
      add("bip-" + std::to_string(a) + "x" + std::to_string(b) + "-d" +
              std::to_string(pct),
          generate("bipartite", p, static_cast<std::uint64_t>(10 * a + b + pct)),
          true);
    }
  for (int n = 4; n <= 8; ++n)
    for (int seed = 1; seed <= 2; ++seed) {
      p = {};
      p.n = n;
      p.edge_count = n - 1;
      add("interval-n" + two_digits(n) + "-s" + std::to_string(seed),
          generate("interval", p, static_cast<std::uint64_t>(100 * n + seed)),
          true);
    }

  // Unbalanced controls; modest t_max keeps the materialized engine desk-scale.
  for (int n : {3, 5, 7}) {
    p = {};
    p.n = n;
    add("odd-cycle-" + two_digits(n), generate("odd_cycle", p, 1), false, 3);
  }
  {
    Hypergraph h;
    h.n = 3;
    h.edges = {vbit(1) | vbit(2), vbit(2) | vbit(3), vbit(1) | vbit(3),
               vbit(1) | vbit(2) | vbit(3)};
    add("triangle-bigedge", h, false, 3);
  }

  std::sort(out.begin(), out.end(),
            [](const CorpusInstance& a, const CorpusInstance& b) {
              return a.id < b.id;
            });
  return out;
}

void write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json manifest;
  manifest["instances"] = nlohmann::json::array();
  for (const CorpusInstance& inst : builtin_corpus()) {
    nlohmann::json doc = to_json(inst.h);
    doc["id"] = inst.id;
    std::string file = inst.id + ".json";
    write_text_file(dir + "/" + file, doc.dump(2) + "\n");
    nlohmann::json entry;
    entry["balanced"] = inst.balanced_expected;
    entry["file"] = file;
    entry["id"] = inst.id;
    entry["t_max"] = inst.t_max;
    manifest["instances"].push_back(entry);
  }
  write_text_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

std::vector<CorpusInstance> load_corpus(const std::string& dir) {
  nlohmann::json manifest = parse_json_file(dir + "/manifest.json");
  std::vector<CorpusInstance> out;
  for (const auto& entry : manifest.at("instances")) {
    CorpusInstance inst;
    inst.id = entry.at("id").get<std::string>();
    inst.balanced_expected = entry.at("balanced").get<bool>();
    inst.t_max = entry.value("t_max", 0);
    inst.h = hypergraph_from_json(
        parse_json_file(dir + "/" + entry.at("file").get<std::string>()));
    out.push_back(std::move(inst));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusInstance& a, const CorpusInstance& b) {
              return a.id < b.id;
            });
  return out;
}

}  // namespace coverdepth
