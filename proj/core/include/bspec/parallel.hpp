#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace bspec {

/// Runs index ranges on a fixed number of threads. Chunks have a fixed size
/// independent of the worker count, and every merge is by index, so results
/// never depend on how many workers ran.
class Executor {
 public:
  explicit Executor(unsigned workers = 1) : workers_(workers == 0 ? 1 : workers) {}
  unsigned workers() const { return workers_; }

  /// Calls body(begin, end) once per chunk of [0, total).
  void for_chunks(std::uint64_t total, std::uint64_t chunk,
                  const std::function<void(std::uint64_t, std::uint64_t)>& body) const;

  /// Least index in [0, total) reported by search. search(begin, end) returns
  /// the least hit inside its chunk, if any. Chunks lying entirely past the
  /// best hit found so far are skipped.
  std::optional<std::uint64_t> find_first(
      std::uint64_t total, std::uint64_t chunk,
      const std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t)>& search) const;

 private:
  unsigned workers_;
};

}  // namespace bspec
