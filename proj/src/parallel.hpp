#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hetho::detail
{
inline unsigned resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/*!
 * Run task(i) for i in [0, n) on up to \c workers threads.
 *
 * Tasks are claimed in fixed interleaved order; callers write into
 * per-task slots so the result does not depend on scheduling.
 */
template<class F>
void parallel_tasks(std::size_t n, unsigned workers, F&& task)
{
    unsigned const threads
        = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), n));
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            task(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
    {
        pool.emplace_back([&, t] {
            try
            {
                for (std::size_t i = t; i < n; i += threads)
                    task(i);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}
}  // namespace hetho::detail
