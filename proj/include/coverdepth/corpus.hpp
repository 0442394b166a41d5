// The bundled instance corpus: a deterministic builder, golden-file writing
// (one instance per file plus a manifest of expected verdicts), and loading.

#ifndef COVERDEPTH_CORPUS_HPP
#define COVERDEPTH_CORPUS_HPP

#include <string>
#include <vector>

#include "coverdepth/hypergraph.hpp"

namespace coverdepth {

struct CorpusInstance {
  std::string id;
  Hypergraph h;
  bool balanced_expected = true;
  int t_max = 0;  // 0 = default n + 2; unbalanced controls cap lower
};

// Seeded families: paths, stars, random trees, even cycles, complete and
// random bipartite graphs, interval hypergraphs, plus odd-cycle controls.
std::vector<CorpusInstance> builtin_corpus();

void write_corpus(const std::string& dir);
std::vector<CorpusInstance> load_corpus(const std::string& dir);

}  // namespace coverdepth

#endif
