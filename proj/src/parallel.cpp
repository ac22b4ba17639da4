#include "groth/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace groth {

namespace {

int env_threads() {
    const char* s = std::getenv("GROTHENDIECK_THREADS");
    if (s == nullptr) return 1;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s, s + std::strlen(s), v);
    if (ec != std::errc{} || *ptr != '\0' || v < 1) return 1;
    return v;
}

std::atomic<int> g_override{0};

}  // namespace

int num_threads() {
    int o = g_override.load(std::memory_order_relaxed);
    if (o > 0) return o;
    static const int from_env = env_threads();
    return from_env;
}

void set_num_threads(int n) { g_override.store(n > 0 ? n : 0, std::memory_order_relaxed); }

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace groth
