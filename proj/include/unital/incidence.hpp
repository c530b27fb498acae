#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "unital/pg.hpp"

namespace unital {

enum class LineKind { vertical, curve, infinity };

const char* to_string(LineKind k);

/// The lines of a plane model, each stored as the packed codes of its
/// q^2+1 points. All models share the point set of PG(2,q^2).
struct LineSystem {
  std::uint32_t points_per_line = 0;
  std::vector<std::uint32_t> codes;  // line i occupies [i*ppl, (i+1)*ppl)
  std::vector<LineKind> kinds;
  std::function<nlohmann::json(std::size_t)> describe;

  std::size_t size() const { return kinds.size(); }
  std::span<const std::uint32_t> line(std::size_t i) const {
    return {codes.data() + i * points_per_line, points_per_line};
  }
};

/// Lines of the standard PG(2,q^2) in packed dual-coordinate order.
LineSystem standard_lines(const Field& f);

/// Membership bitmap over the packed code space.
class PointMask {
 public:
  PointMask(const Field& f, const PointSet& s);
  bool operator[](std::uint32_t code) const { return bits_[code] != 0; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// |line ∩ S| for every line, in line order.
std::vector<std::uint32_t> intersection_sizes(const LineSystem& lines, const PointMask& mask);

/// True iff every line meets the set in 1 or q+1 points. Stops at the
/// first offending line.
bool is_two_character(const LineSystem& lines, const PointMask& mask, std::uint32_t q);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Callers write
/// results by index so output order never depends on scheduling.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Default worker count (hardware concurrency, at least 1).
unsigned default_jobs();

}  // namespace unital
