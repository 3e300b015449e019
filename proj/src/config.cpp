#include "cltlab/config.hpp"

#include <atomic>
#include <cstdlib>

namespace cltlab {

namespace {

int initial_max_order() {
  if (const char* env = std::getenv("CLTLAB_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10000;
}

std::atomic<int> g_max_order{initial_max_order()};
std::atomic<int> g_aut_bound{512};
std::atomic<int> g_lattice_threshold{1500};

}  // namespace

int max_order() { return g_max_order.load(); }
void set_max_order(int bound) { g_max_order.store(bound); }

int aut_bound() { return g_aut_bound.load(); }
void set_aut_bound(int bound) { g_aut_bound.store(bound); }

int lattice_threshold() { return g_lattice_threshold.load(); }
void set_lattice_threshold(int bound) { g_lattice_threshold.store(bound); }

}  // namespace cltlab
