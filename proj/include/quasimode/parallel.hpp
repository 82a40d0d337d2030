#ifndef QUASIMODE_PARALLEL_HPP
#define QUASIMODE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace quasimode
{

/// Evaluates fn(0), ..., fn(n-1) on worker threads and returns the results in
/// index order. If any call throws, the exception of the lowest failing index
/// is rethrown, so failures are reported deterministically.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>>
{
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<Result> results(n);
    std::vector<std::exception_ptr> errors(n);

    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
    auto run = [&](std::size_t worker) {
        for (std::size_t i = worker; i < n; i += workers)
        {
            try
            {
                results[i] = fn(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    if (workers == 1)
        run(0);
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }

    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace quasimode

#endif // QUASIMODE_PARALLEL_HPP
