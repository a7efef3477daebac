#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>

#include "gfroots/field.hpp"

namespace gfroots {

/// One point of the binary-reflected Gray walk over GF(2^m).
struct GrayStep {
  std::uint32_t index = 0;
  Element x;
  /// Coordinate flipped relative to the previous point; empty for index 0.
  std::optional<unsigned> delta_pos;

  friend bool operator==(const GrayStep&, const GrayStep&) = default;
};

constexpr Element gray_point(std::uint32_t j) noexcept {
  return Element{j ^ (j >> 1)};
}

/// Bit flipped between gray_point(j - 1) and gray_point(j), for j >= 1.
constexpr unsigned gray_delta(std::uint32_t j) noexcept {
  return static_cast<unsigned>(std::countr_zero(j));
}

/// Range of all 2^m Gray steps, starting at x_0 = 0.
class GraySequence {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GrayStep;
    using difference_type = std::ptrdiff_t;
    using reference = GrayStep;
    using pointer = void;

    iterator() = default;
    explicit iterator(std::uint32_t j) : j_(j) {}

    GrayStep operator*() const {
      GrayStep s{j_, gray_point(j_), std::nullopt};
      if (j_ != 0) s.delta_pos = gray_delta(j_);
      return s;
    }
    iterator& operator++() {
      ++j_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++j_;
      return old;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint32_t j_ = 0;
  };

  explicit GraySequence(unsigned m);

  unsigned m() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }
  iterator begin() const { return iterator(0); }
  iterator end() const { return iterator(size()); }

 private:
  unsigned m_;
};

/// Throws Error{BadSpec} unless 2 <= m <= 16.
GraySequence gray_sequence(unsigned m);

}  // namespace gfroots
