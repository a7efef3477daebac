#pragma once

#include <cstdint>

#include "gfroots/field.hpp"

namespace gfroots {

/// Tallies of field operations performed by one finder invocation.
struct OpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t exps = 0;

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// A nonzero element held by its discrete log, as produced by exponentiation
/// through the log table. Multiplying by it skips one table lookup.
struct LogElement {
  std::uint32_t log = 0;
};

// The evaluation kernels are templated on an arithmetic policy so the same
// code path is timed (PlainOps) and instrumented (CountingOps).

class PlainOps {
 public:
  explicit PlainOps(const Field& field) : field_(&field) {}

  const Field& field() const noexcept { return *field_; }
  Element add(Element a, Element b) const noexcept { return Field::add(a, b); }
  Element mul(Element a, Element b) const noexcept { return field_->mul(a, b); }
  Element mul(Element a, LogElement b) const noexcept {
    if (a.is_zero()) return Element{};
    return field_->antilog_table().data()[field_->log(a) + b.log];
  }
  /// a^e for nonzero a, left in log form: e * log(a) mod (2^m - 1).
  LogElement exp(Element a, std::uint32_t e) const {
    return LogElement{field_->reduce(std::uint64_t{e} * field_->log(a))};
  }

 private:
  const Field* field_;
};

class CountingOps {
 public:
  explicit CountingOps(const Field& field) : plain_(field) {}

  const Field& field() const noexcept { return plain_.field(); }
  Element add(Element a, Element b) noexcept {
    ++counts_.adds;
    return plain_.add(a, b);
  }
  Element mul(Element a, Element b) noexcept {
    ++counts_.muls;
    return plain_.mul(a, b);
  }
  Element mul(Element a, LogElement b) noexcept {
    ++counts_.muls;
    return plain_.mul(a, b);
  }
  LogElement exp(Element a, std::uint32_t e) {
    ++counts_.exps;
    return plain_.exp(a, e);
  }

  const OpCounts& counts() const noexcept { return counts_; }

 private:
  PlainOps plain_;
  OpCounts counts_;
};

}  // namespace gfroots
