#include "polycone/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace polycone {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    long long n = std::stoll(v);
    return n > 0 ? static_cast<std::size_t>(n) : fallback;
  } catch (...) {
    return fallback;
  }
}

std::atomic<std::size_t> g_dim_cap{0};
std::atomic<std::size_t> g_threads{0};

}  // namespace

std::size_t dim_cap() {
  std::size_t c = g_dim_cap.load();
  return c ? c : env_or("POLYCONE_DIM_CAP", 12);
}

void set_dim_cap(std::size_t cap) { g_dim_cap.store(cap); }

std::size_t thread_count() {
  std::size_t t = g_threads.load();
  return t ? t : env_or("POLYCONE_THREADS", 1);
}

void set_thread_count(std::size_t n) { g_threads.store(n); }

}  // namespace polycone
