#include "coverdepth/homology_cache.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "coverdepth/rng.hpp"

namespace coverdepth {

std::optional<BettiVector> MemoryHomologyCache::get(const std::string& key) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MemoryHomologyCache::put(const std::string& key, const BettiVector& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.emplace(key, value);
}

DiskHomologyCache::DiskHomologyCache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string DiskHomologyCache::path_for(const std::string& key) const {
  return dir_ + "/" + hex64(fnv1a64(key)) + ".json";
}

std::optional<BettiVector> DiskHomologyCache::get(const std::string& key) {
  if (auto hit = memory_.get(key)) return hit;
  std::lock_guard<std::mutex> lock(io_mutex_);
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key)
      throw std::runtime_error("key mismatch");
    BettiVector b;
    for (const auto& v : j.at("betti")) b.dims.push_back(v.get<long long>());
    memory_.put(key, b);
    return b;
  } catch (const std::exception& e) {
    if (!warned_) {
      std::cerr << "warning: corrupt homology cache entry, recomputing ("
                << e.what() << ")\n";
      warned_ = true;
    }
    return std::nullopt;
  }
}

void DiskHomologyCache::put(const std::string& key, const BettiVector& value) {
  memory_.put(key, value);
  std::lock_guard<std::mutex> lock(io_mutex_);
  nlohmann::json j;
  j["betti"] = value.dims;
  j["key"] = key;
  std::ofstream out(path_for(key));
  out << j.dump() << "\n";
}

BettiVector reduced_betti_cached(const SimplicialComplex& d, const FieldSpec& k,
                                 HomologyCache* cache) {
  if (!cache) return reduced_betti(d, k);
  std::string key = homology_key(d, k);
  if (auto hit = cache->get(key)) return *hit;
  BettiVector b = reduced_betti(d, k);
  cache->put(key, b);
  return b;
}

}  // namespace coverdepth
