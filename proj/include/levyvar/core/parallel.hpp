#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace levyvar {

// Deterministic chunked map-reduce over replica indices [0, n). The chunk layout depends
// only on n, and chunk results are merged in chunk order after all workers join, so the
// outcome is bit-identical for any worker count.
//
// MakeAcc: () -> Acc;  Body: (Acc&, uint64_t replica) -> void;  Merge: (Acc&, const Acc&).
template <class Acc, class MakeAcc, class Body, class Merge>
Acc chunked_reduce(std::uint64_t n, int workers, MakeAcc make_acc, Body body, Merge merge,
                   std::uint64_t chunk_size = 4096) {
    if (workers < 1) workers = 1;
    const std::uint64_t chunks = n == 0 ? 0 : (n + chunk_size - 1) / chunk_size;
    std::vector<Acc> partial;
    partial.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) partial.push_back(make_acc());

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t lo = c * chunk_size;
        const std::uint64_t hi = std::min(n, lo + chunk_size);
        for (std::uint64_t r = lo; r < hi; ++r) body(partial[c], r);
    };

    if (workers == 1 || chunks <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto worker = [&] {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= chunks) return;
                try {
                    run_chunk(c);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int nthreads = static_cast<int>(std::min<std::uint64_t>(workers, chunks));
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }

    Acc total = make_acc();
    for (std::uint64_t c = 0; c < chunks; ++c) merge(total, partial[c]);
    return total;
}

}  // namespace levyvar
