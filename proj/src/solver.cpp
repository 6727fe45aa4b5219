#include "rzs/solver.h"

namespace rzs {

namespace {

size_t round_up_pow2(size_t x) {
  size_t p = 1;
  while (p < x) p <<= 1;
  return p;
}

}  // namespace

TranspositionTable::TranspositionTable(size_t shard_count) {
  size_t n = round_up_pow2(std::max<size_t>(1, shard_count));
  mask_ = n - 1;
  shards_ = std::make_unique<Shard[]>(n);
}

std::optional<TranspositionTable::Entry> TranspositionTable::probe(
    uint64_t key) const {
  const Shard& s = shards_[key & mask_];
  std::lock_guard<std::mutex> lock(s.mu);
  auto it = s.map.find(key);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

void TranspositionTable::store(uint64_t key, Entry e) {
  Shard& s = shards_[key & mask_];
  std::lock_guard<std::mutex> lock(s.mu);
  s.map.emplace(key, std::move(e));  // first proof wins; duplicates agree
}

size_t TranspositionTable::size() const {
  size_t total = 0;
  for (size_t i = 0; i <= mask_; ++i) {
    std::lock_guard<std::mutex> lock(shards_[i].mu);
    total += shards_[i].map.size();
  }
  return total;
}

template class Solver<GoGame>;
template class Solver<HexGame>;

}  // namespace rzs
