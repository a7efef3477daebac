#include "gfroots/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>

#include "json.hpp"

#include "gfroots/error.hpp"
#include "gfroots/field.hpp"
#include "gfroots/random.hpp"
#include "gfroots/roots.hpp"

namespace gfroots {

namespace {

using Clock = std::chrono::steady_clock;

// Polynomials per timed chunk. Short chunks let the per-chunk minimum over
// passes discard intervals in which the thread was descheduled.
constexpr std::size_t kChunk = 50;

// Kept out of line so both walks get the same standalone code generation
// instead of whatever survives inlining into run_benchmark.
template <class Walk>
[[gnu::noinline]] double time_chunk_us(std::span<const Poly> polys, const Field& field,
                                       Walk walk, std::uint64_t& zeros) {
  PlainOps ops(field);
  std::uint64_t found = 0;
  auto count_zero = [&found](Element, Element v) { found += v.is_zero(); };
  const auto start = Clock::now();
  for (const Poly& p : polys) walk(p, ops, count_zero);
  const std::chrono::duration<double, std::micro> elapsed = Clock::now() - start;
  zeros += found;
  return elapsed.count();
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& config) {
  if (config.degrees.empty()) {
    throw Error(ErrorKind::BadSpec, "benchmark needs at least one degree");
  }
  if (config.trials == 0) {
    throw Error(ErrorKind::BadSpec, "benchmark needs at least one trial");
  }
  if (config.passes == 0) {
    throw Error(ErrorKind::BadSpec, "benchmark needs at least one pass");
  }
  for (std::size_t t : config.degrees) {
    if (t == 0) throw Error(ErrorKind::BadSpec, "degrees must be at least 1");
  }
  const Field field(default_spec(config.m));
  PolyRng rng(config.seed);

  auto chien = [](const Poly& p, PlainOps& ops, auto& visit) {
    chien_walk(p, ops, visit);
  };
  auto fast = [](const Poly& p, PlainOps& ops, auto& visit) {
    fast_walk(p, ops, visit);
  };

  std::vector<BenchRow> rows;
  for (std::size_t t : config.degrees) {
    std::vector<Poly> polys;
    polys.reserve(config.trials);
    for (std::size_t i = 0; i < config.trials; ++i) {
      polys.push_back(rng.poly(field, t));
    }

    BenchRow row;
    row.degree = t;
    const std::size_t chunks = (polys.size() + kChunk - 1) / kChunk;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best_chien(chunks, inf);
    std::vector<double> best_fast(chunks, inf);
    for (std::size_t pass = 0; pass < config.passes; ++pass) {
      row.chien_roots = 0;
      row.fast_roots = 0;
      for (std::size_t c = 0; c < chunks; ++c) {
        const std::span<const Poly> chunk =
            std::span<const Poly>(polys).subspan(c * kChunk).first(
                std::min(kChunk, polys.size() - c * kChunk));
        best_chien[c] = std::min(
            best_chien[c], time_chunk_us(chunk, field, chien, row.chien_roots));
        best_fast[c] = std::min(
            best_fast[c], time_chunk_us(chunk, field, fast, row.fast_roots));
      }
    }
    const double n = static_cast<double>(polys.size());
    row.chien_us = std::accumulate(best_chien.begin(), best_chien.end(), 0.0) / n;
    row.fast_us = std::accumulate(best_fast.begin(), best_fast.end(), 0.0) / n;
    // Chien skips x = 0; count it the same way the root finder would.
    for (const Poly& p : polys) row.chien_roots += p.coeff(0).is_zero();

    // Clock granularity can round a single tiny run to zero.
    constexpr double kFloorUs = 1e-3;
    if (row.chien_us < kFloorUs) row.chien_us = kFloorUs;
    if (row.fast_us < kFloorUs) row.fast_us = kFloorUs;
    row.speedup = row.chien_us / row.fast_us;
    row.predicted_ratio =
        config.weights.cost(predict_ops(Method::Chien, t, config.m)) /
        config.weights.cost(predict_ops(Method::Fast, t, config.m));
    rows.push_back(row);
  }
  return rows;
}

void write_text_table(std::ostream& os, std::span<const BenchRow> rows) {
  const auto flags = os.flags();
  os << std::setw(6) << "degree" << std::setw(12) << "chien_us"
     << std::setw(12) << "fast_us" << std::setw(10) << "speedup"
     << std::setw(12) << "predicted" << '\n';
  os << std::fixed;
  for (const BenchRow& r : rows) {
    os << std::setw(6) << r.degree << std::setprecision(3) << std::setw(12)
       << r.chien_us << std::setw(12) << r.fast_us << std::setprecision(2)
       << std::setw(10) << r.speedup << std::setw(12) << r.predicted_ratio
       << '\n';
  }
  os.flags(flags);
}

void write_machine_records(std::ostream& os, std::span<const BenchRow> rows) {
  for (const BenchRow& r : rows) {
    nlohmann::json rec = {
        {"degree", r.degree},
        {"chien_us", r.chien_us},
        {"fast_us", r.fast_us},
        {"speedup", r.speedup},
        {"predicted_ratio", r.predicted_ratio},
    };
    os << rec.dump() << '\n';
  }
}

}  // namespace gfroots
