#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rigidcensus {

// FNV-1a over the raw key words; census keys are short (<= ~80 entries).
struct KeyHash {
    std::size_t operator()(const std::vector<long long>& key) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (long long value : key) {
            h ^= static_cast<std::size_t>(value);
            h *= 1099511628211ULL;
            h ^= h >> 29;
        }
        return h;
    }
};

// Multiplicity map from fixed-length int64 keys, usable without the GIL.
class CensusCounter {
  public:
    void add(const long long* key, std::size_t length) {
        scratch_.assign(key, key + length);
        auto [it, inserted] = counts_.try_emplace(scratch_, 1);
        if (!inserted) {
            ++it->second;
        }
    }

    std::size_t size() const { return counts_.size(); }

    std::vector<std::pair<std::vector<long long>, long long>> items() const {
        return {counts_.begin(), counts_.end()};
    }

  private:
    std::unordered_map<std::vector<long long>, long long, KeyHash> counts_;
    std::vector<long long> scratch_;
};

}  // namespace rigidcensus
