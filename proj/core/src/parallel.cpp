#include "transorder/parallel.hpp"

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace transorder {

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    const std::size_t nthreads =
        workers <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = count * t / nthreads;
        const std::size_t hi = count * (t + 1) / nthreads;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace transorder
