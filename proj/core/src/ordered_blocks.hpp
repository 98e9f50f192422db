#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace parkfn::detail {

// Produces blocks [0, block_count) on worker threads and consumes them on
// the calling thread in strict block order, so the output is identical to
// the sequential run. In-flight blocks are capped at 2x the worker count.
template <typename Item>
void ordered_blocks(std::uint64_t block_count, int threads,
                    const std::function<void(std::uint64_t, std::vector<Item>&)>& produce,
                    const std::function<void(std::vector<Item>&)>& consume) {
  if (threads <= 1 || block_count <= 1) {
    std::vector<Item> buffer;
    for (std::uint64_t block = 0; block < block_count; ++block) {
      buffer.clear();
      produce(block, buffer);
      consume(buffer);
    }
    return;
  }

  std::mutex mutex;
  std::condition_variable space_available;
  std::condition_variable block_ready;
  std::map<std::uint64_t, std::vector<Item>> pending;
  std::atomic<std::uint64_t> next_to_claim{0};
  std::uint64_t next_to_emit = 0;
  std::exception_ptr failure;
  const std::size_t max_pending = static_cast<std::size_t>(threads) * 2;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t block = next_to_claim.fetch_add(1);
        if (block >= block_count) return;
        std::vector<Item> buffer;
        produce(block, buffer);
        std::unique_lock lock(mutex);
        space_available.wait(lock, [&] {
          return pending.size() < max_pending || block == next_to_emit ||
                 failure != nullptr;
        });
        if (failure) return;
        pending.emplace(block, std::move(buffer));
        block_ready.notify_all();
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
      block_ready.notify_all();
      space_available.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

  {
    std::unique_lock lock(mutex);
    while (next_to_emit < block_count && !failure) {
      block_ready.wait(lock, [&] {
        return pending.contains(next_to_emit) || failure != nullptr;
      });
      if (failure) break;
      std::vector<Item> buffer = std::move(pending.at(next_to_emit));
      pending.erase(next_to_emit);
      lock.unlock();
      try {
        consume(buffer);
      } catch (...) {
        lock.lock();
        if (!failure) failure = std::current_exception();
        space_available.notify_all();
        break;
      }
      lock.lock();
      ++next_to_emit;
      space_available.notify_all();
    }
    // Unblock any worker still waiting for space.
    if (next_to_emit >= block_count || failure) {
      next_to_claim.store(block_count);
      space_available.notify_all();
    }
  }

  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace parkfn::detail
