#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace gfroots {

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 16;

/// An element of GF(2^m) in standard basis: bit k is the coordinate on α^k.
struct Element {
  std::uint32_t value = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const noexcept { return value == 0; }
  constexpr bool bit(unsigned k) const noexcept { return (value >> k) & 1U; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

struct FieldSpec {
  unsigned m = 0;
  /// Bit k is the coefficient of x^k; bit m must be set.
  std::uint32_t prim_poly = 0;
};

/// Conventional primitive polynomial for the given m (2 <= m <= 16).
std::uint32_t default_prim_poly(unsigned m);
FieldSpec default_spec(unsigned m);

/// GF(2^m) with log/antilog tables. Immutable after construction.
class Field {
 public:
  /// Throws Error{BadSpec} for m out of range or a malformed mask, and
  /// Error{NotPrimitive} if the orbit of α is shorter than 2^m - 1.
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  unsigned m() const noexcept { return spec_.m; }
  /// 2^m
  std::uint32_t size() const noexcept { return std::uint32_t{1} << spec_.m; }
  /// 2^m - 1, the order of the multiplicative group.
  std::uint32_t order() const noexcept { return size() - 1; }

  bool contains(Element a) const noexcept { return a.value < size(); }
  /// Checked construction; throws Error{BadSpec} if value >= 2^m.
  Element element(std::uint32_t value) const;

  /// α^k for k in [0, 2^m - 2]. The backing storage repeats the cycle once
  /// more, so data()[i + j] is valid for i, j in [0, 2^m - 2].
  std::span<const Element> antilog_table() const noexcept {
    return {antilog_.data(), order()};
  }
  Element antilog(std::uint64_t k) const noexcept {
    return antilog_[reduce(k)];
  }
  /// k mod (2^m - 1). Values below 2^32 avoid a hardware division.
  std::uint32_t reduce(std::uint64_t k) const noexcept {
    if (k >> 32) return static_cast<std::uint32_t>(k % order());
    // Lemire's multiply-shift remainder, exact for 32-bit k and divisor.
    const std::uint64_t low = reduce_magic_ * k;
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint32_t>((u128{low} * order()) >> 64);
  }
  /// Discrete log of a nonzero element, in [0, 2^m - 2]. Throws
  /// Error{DivisionByZero} for 0.
  std::uint32_t log(Element a) const {
    if (a.is_zero()) [[unlikely]] throw_log_of_zero();
    return log_[a.value];
  }

  static constexpr Element add(Element a, Element b) noexcept {
    return Element{a.value ^ b.value};
  }

  Element mul(Element a, Element b) const noexcept {
    if (a.is_zero() || b.is_zero()) return Element{};
    // antilog_ is stored twice over so the exponent sum needs no reduction.
    return antilog_[log_[a.value] + log_[b.value]];
  }

  /// Throws Error{ZeroToZero} for 0^0.
  Element pow(Element a, std::uint64_t e) const;
  /// Throws Error{DivisionByZero} for a = 0.
  Element inv(Element a) const;

 private:
  [[noreturn]] static void throw_log_of_zero();

  FieldSpec spec_;
  std::uint64_t reduce_magic_ = 0;
  std::vector<Element> antilog_;
  std::vector<std::uint32_t> log_;
};

}  // namespace gfroots
