// Memoized reduced-homology lookups. The in-memory cache is the hot path for
// the depth searches (the degree-complex signatures collapse to few distinct
// facet sets); the disk layer is the CLI's content-addressed cache.

#ifndef COVERDEPTH_HOMOLOGY_CACHE_HPP
#define COVERDEPTH_HOMOLOGY_CACHE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "coverdepth/simplicial.hpp"

namespace coverdepth {

class HomologyCache {
 public:
  virtual ~HomologyCache() = default;
  virtual std::optional<BettiVector> get(const std::string& key) = 0;
  virtual void put(const std::string& key, const BettiVector& value) = 0;
};

class MemoryHomologyCache : public HomologyCache {
 public:
  std::optional<BettiVector> get(const std::string& key) override;
  void put(const std::string& key, const BettiVector& value) override;

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, BettiVector> map_;
};

// Content-addressed files under `dir`, backed by a memory layer. Corrupt
// entries are reported once to stderr and recomputed.
class DiskHomologyCache : public HomologyCache {
 public:
  explicit DiskHomologyCache(std::string dir);
  std::optional<BettiVector> get(const std::string& key) override;
  void put(const std::string& key, const BettiVector& value) override;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
  MemoryHomologyCache memory_;
  std::mutex io_mutex_;
  bool warned_ = false;
};

// Computes through the cache when one is given.
BettiVector reduced_betti_cached(const SimplicialComplex& d, const FieldSpec& k,
                                 HomologyCache* cache);

}  // namespace coverdepth

#endif
