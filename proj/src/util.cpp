#include "wfilt/util.hpp"

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace wfilt {

int thread_hint() {
    const char* env = std::getenv("WFILT_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    if (n < 1) return 1;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 0 && n > hw) n = hw;
    return n;
}

void parallel_for(int n, const std::function<void(int)>& f) {
    int workers = thread_hint();
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    for (int w = 0; w < std::min(workers, n); ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        }));
    for (auto& fu : futs) fu.get();
}

}  // namespace wfilt
