#include "bspec/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace bspec {

namespace {

// Pulls chunk indices in increasing order from a shared counter.
void run_workers(unsigned workers, std::uint64_t chunks, const std::function<void(std::uint64_t)>& body) {
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto loop = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) body(c);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = chunks;
    }
  };
  const unsigned extra = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks)) - 1;
  std::vector<std::thread> threads;
  threads.reserve(extra);
  for (unsigned i = 0; i < extra; ++i) threads.emplace_back(loop);
  loop();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void Executor::for_chunks(std::uint64_t total, std::uint64_t chunk,
                          const std::function<void(std::uint64_t, std::uint64_t)>& body) const {
  if (total == 0) return;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  run_workers(workers_, chunks, [&](std::uint64_t c) {
    const std::uint64_t begin = c * chunk;
    body(begin, std::min(total, begin + chunk));
  });
}

std::optional<std::uint64_t> Executor::find_first(
    std::uint64_t total, std::uint64_t chunk,
    const std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t)>& search) const {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  if (total == 0) return std::nullopt;
  chunk = std::max<std::uint64_t>(chunk, 1);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> best{kNone};
  run_workers(workers_, chunks, [&](std::uint64_t c) {
    const std::uint64_t begin = c * chunk;
    if (begin >= best.load(std::memory_order_relaxed)) return;
    const auto hit = search(begin, std::min(total, begin + chunk));
    if (!hit) return;
    std::uint64_t cur = best.load();
    while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
    }
  });
  const std::uint64_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

}  // namespace bspec
