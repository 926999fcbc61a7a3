/*
 * This file is a part of the pdta-reach project.
 *
 * See files AUTHORS and LICENSE for copyright details.
 */

#ifndef PDTA_FLAT_HASH_HPP
#define PDTA_FLAT_HASH_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace pdta {

// Open-addressing set of 64-bit keys with linear probing. The store's hot
// membership tests run through this; keys are (state, payload) packs well
// below 2^62, leaving room for the empty/tombstone sentinels.
class FlatSet64 {
public:
  FlatSet64() : slots_(kMinCapacity, kEmpty), mask_(kMinCapacity - 1) {}

  bool contains(std::uint64_t key) const {
    const std::uint64_t k = key + 2;
    std::size_t i = index(k);
    for (;;) {
      const std::uint64_t s = slots_[i];
      if (s == k) return true;
      if (s == kEmpty) return false;
      i = (i + 1) & mask_;
    }
  }

  // Returns true when the key was newly inserted.
  bool insert(std::uint64_t key) {
    assert(key < ~std::uint64_t{2});
    if ((size_ + tombstones_ + 1) * 10 >= slots_.size() * 7) grow();
    const std::uint64_t k = key + 2;
    std::size_t i = index(k);
    std::size_t first_tomb = kNoSlot;
    for (;;) {
      const std::uint64_t s = slots_[i];
      if (s == k) return false;
      if (s == kTombstone && first_tomb == kNoSlot) first_tomb = i;
      if (s == kEmpty) {
        if (first_tomb != kNoSlot) {
          slots_[first_tomb] = k;
          --tombstones_;
        } else {
          slots_[i] = k;
        }
        ++size_;
        return true;
      }
      i = (i + 1) & mask_;
    }
  }

  bool erase(std::uint64_t key) {
    const std::uint64_t k = key + 2;
    std::size_t i = index(k);
    for (;;) {
      const std::uint64_t s = slots_[i];
      if (s == k) {
        slots_[i] = kTombstone;
        --size_;
        ++tombstones_;
        return true;
      }
      if (s == kEmpty) return false;
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const { return size_; }

private:
  static constexpr std::uint64_t kEmpty = 0;
  static constexpr std::uint64_t kTombstone = 1;
  static constexpr std::size_t kNoSlot = ~std::size_t{0};
  static constexpr std::size_t kMinCapacity = 16;

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::size_t index(std::uint64_t k) const {
    return static_cast<std::size_t>(mix(k)) & mask_;
  }

  void grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    mask_ = slots_.size() - 1;
    size_ = 0;
    tombstones_ = 0;
    for (std::uint64_t s : old)
      if (s != kEmpty && s != kTombstone) {
        std::size_t i = index(s);
        while (slots_[i] != kEmpty) i = (i + 1) & mask_;
        slots_[i] = s;
        ++size_;
      }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t mask_;
  std::size_t size_ = 0;
  std::size_t tombstones_ = 0;
};

// Open-addressing map from 64-bit keys to 32-bit values, insert-only.
class FlatMap64 {
public:
  static constexpr std::uint32_t kNotFound = 0xffffffffu;

  FlatMap64() : keys_(kMinCapacity, kEmpty), values_(kMinCapacity, 0),
                mask_(kMinCapacity - 1) {}

  std::uint32_t find(std::uint64_t key) const {
    const std::uint64_t k = key + 1;
    std::size_t i = index(k);
    for (;;) {
      if (keys_[i] == k) return values_[i];
      if (keys_[i] == kEmpty) return kNotFound;
      i = (i + 1) & mask_;
    }
  }

  void insert(std::uint64_t key, std::uint32_t value) {
    assert(key < ~std::uint64_t{1});
    if ((size_ + 1) * 10 >= keys_.size() * 7) grow();
    const std::uint64_t k = key + 1;
    std::size_t i = index(k);
    while (keys_[i] != kEmpty) {
      if (keys_[i] == k) {
        values_[i] = value;
        return;
      }
      i = (i + 1) & mask_;
    }
    keys_[i] = k;
    values_[i] = value;
    ++size_;
  }

  std::size_t size() const { return size_; }

private:
  static constexpr std::uint64_t kEmpty = 0;
  static constexpr std::size_t kMinCapacity = 16;

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::size_t index(std::uint64_t k) const {
    return static_cast<std::size_t>(mix(k)) & mask_;
  }

  void grow() {
    std::vector<std::uint64_t> old_k = std::move(keys_);
    std::vector<std::uint32_t> old_v = std::move(values_);
    keys_.assign(old_k.size() * 2, kEmpty);
    values_.assign(old_v.size() * 2, 0);
    mask_ = keys_.size() - 1;
    size_ = 0;
    for (std::size_t j = 0; j < old_k.size(); ++j)
      if (old_k[j] != kEmpty) {
        std::size_t i = index(old_k[j]);
        while (keys_[i] != kEmpty) i = (i + 1) & mask_;
        keys_[i] = old_k[j];
        values_[i] = old_v[j];
        ++size_;
      }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> values_;
  std::size_t mask_;
  std::size_t size_ = 0;
};

}  // namespace pdta

#endif  // PDTA_FLAT_HASH_HPP
