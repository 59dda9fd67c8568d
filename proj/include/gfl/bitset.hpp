#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gfl {

/// Fixed-size dynamic bitset over 64-bit words. Only the operations the
/// neighborhood kernels need.
class Bitset {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}
  Bitset(std::size_t bits, std::span<const std::uint64_t> words)
      : bits_(bits), words_(words.begin(), words.end()) {}

  [[nodiscard]] auto size() const noexcept -> std::size_t { return bits_; }
  [[nodiscard]] auto words() const noexcept -> std::span<const std::uint64_t> { return words_; }
  [[nodiscard]] auto words() noexcept -> std::span<std::uint64_t> { return words_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] auto test(std::size_t i) const noexcept -> bool {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  [[nodiscard]] auto count() const noexcept -> std::size_t {
    std::size_t total = 0;
    for (auto w : words_)
      total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  [[nodiscard]] auto any() const noexcept -> bool {
    for (auto w : words_)
      if (w)
        return true;
    return false;
  }

  /// First set bit at index >= from, or npos.
  [[nodiscard]] auto find_from(std::size_t from) const noexcept -> std::size_t {
    if (from >= bits_)
      return npos;
    auto wi = from >> 6;
    auto w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w)
        return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size())
        return npos;
      w = words_[wi];
    }
  }

  [[nodiscard]] auto first() const noexcept -> std::size_t { return find_from(0); }

  auto operator&=(std::span<const std::uint64_t> other) noexcept -> Bitset & {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other[i];
    return *this;
  }

  void and_not(std::span<const std::uint64_t> other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~other[i];
  }

  /// |this & other|
  [[nodiscard]] auto count_and(std::span<const std::uint64_t> other) const noexcept
      -> std::size_t {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      total += static_cast<std::size_t>(std::popcount(words_[i] & other[i]));
    return total;
  }

  /// First index set in both this and other, at or after from.
  [[nodiscard]] auto find_and_from(std::span<const std::uint64_t> other,
                                   std::size_t from) const noexcept -> std::size_t {
    if (from >= bits_)
      return npos;
    auto wi = from >> 6;
    auto w = words_[wi] & other[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w)
        return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size())
        return npos;
      w = words_[wi] & other[wi];
    }
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      for (auto w = words_[wi]; w; w &= w - 1)
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
  }

  friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace gfl
