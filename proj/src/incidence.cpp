#include "unital/incidence.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace unital {

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::vertical:
      return "vertical";
    case LineKind::curve:
      return "curve";
    case LineKind::infinity:
      return "infinity";
  }
  return "?";
}

LineSystem standard_lines(const Field& f) {
  const auto plane = enumerate(f);
  LineSystem ls;
  ls.points_per_line = f.order() + 1;
  ls.codes.reserve(plane.lines.size() * ls.points_per_line);
  for (const auto& l : plane.lines) {
    for (const auto& p : points_on(f, l)) ls.codes.push_back(pack(f, p));
    // x0 = 0 is the line at infinity; the other lines through Y∞ are vertical
    if (l.c[1] == f.zero() && l.c[2] == f.zero())
      ls.kinds.push_back(LineKind::infinity);
    else if (l.c[2] == f.zero())
      ls.kinds.push_back(LineKind::vertical);
    else
      ls.kinds.push_back(LineKind::curve);
  }
  auto lines = plane.lines;
  ls.describe = [lines](std::size_t i) {
    const auto& l = lines[i];
    return nlohmann::json{{"model", "standard"},
                          {"line", nlohmann::json::array({l.c[0].v, l.c[1].v, l.c[2].v})}};
  };
  return ls;
}

PointMask::PointMask(const Field& f, const PointSet& s) : bits_(code_space(f), 0) {
  for (auto c : s.codes()) {
    if (!is_point_code(f, c)) throw ParameterError("point code " + std::to_string(c) + " is not a point of the plane");
    bits_[c] = 1;
  }
}

std::vector<std::uint32_t> intersection_sizes(const LineSystem& lines, const PointMask& mask) {
  std::vector<std::uint32_t> out(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::uint32_t n = 0;
    for (auto c : lines.line(i)) n += mask[c];
    out[i] = n;
  }
  return out;
}

bool is_two_character(const LineSystem& lines, const PointMask& mask, std::uint32_t q) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::uint32_t n = 0;
    for (auto c : lines.line(i)) n += mask[c];
    if (n != 1 && n != q + 1) return false;
  }
  return true;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace unital
