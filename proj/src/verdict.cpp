#include "ringcert/verdict.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ringcert {

Verdict first_failure(std::size_t count, unsigned threads, const std::function<Verdict(std::size_t)>& check)
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            Verdict v = check(i);
            if (!v)
                return v;
        }
        return Verdict::accept();
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::mutex mu;
    Verdict best_verdict;
    std::exception_ptr error;
    std::size_t error_index = count;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            // Indices past a known failure cannot change the answer.
            if (i >= count || i >= best.load())
                return;
            try {
                Verdict v = check(i);
                if (!v) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (i < best.load()) {
                        best.store(i);
                        best_verdict = std::move(v);
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    const unsigned n = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    if (error && error_index < best.load())
        std::rethrow_exception(error);
    if (best.load() < count)
        return best_verdict;
    return Verdict::accept();
}

}  // namespace ringcert
