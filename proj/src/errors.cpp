#include "lcat/errors.hpp"

#include <atomic>

namespace lcat {

namespace {
std::atomic<std::uint64_t> g_cap{10'000'000};
}

std::uint64_t resource_cap() { return g_cap.load(); }

void set_resource_cap(std::uint64_t cap) { g_cap.store(cap); }

void check_cap(std::uint64_t count, const std::string& what) {
  if (count > g_cap.load()) {
    throw ResourceCapError(what + ": " + std::to_string(count) +
                           " objects exceeds the cap of " +
                           std::to_string(g_cap.load()));
  }
}

}  // namespace lcat
