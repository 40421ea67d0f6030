#ifndef MEALY_HASH_HPP_
#define MEALY_HASH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mealy::detail {

  inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }

  template <typename T>
  std::size_t hash_span(std::span<T const> values) noexcept {
    std::size_t seed = values.size();
    for (auto const& v : values) {
      hash_combine(seed, static_cast<std::size_t>(v));
    }
    return seed;
  }

  struct VectorHash {
    template <typename T>
    std::size_t operator()(std::vector<T> const& v) const noexcept {
      return hash_span(std::span<T const>(v));
    }
  };

}  // namespace mealy::detail

#endif  // MEALY_HASH_HPP_
