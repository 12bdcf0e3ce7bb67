// Offline search for counter-wrap demonstration seeds: iterate (vc_seed,
// build_seed) pairs until the planted wrap actually fires — both planted
// groups classified clean, the contracted edge suppressed, a planted edge
// uncovered. The winning pair is frozen into frozen_modwrap_demo().
#include <cstdint>
#include <iostream>
#include <string>

#include "vcs/sweep.hpp"

using namespace vcs;

int main(int argc, char** argv) {
  uint64_t vc0 = argc > 1 ? std::stoull(argv[1]) : 20250815;
  uint64_t builds_per_vc = argc > 2 ? std::stoull(argv[2]) : 4;
  uint64_t max_tries = argc > 3 ? std::stoull(argv[3]) : 40;

  uint64_t tried = 0;
  for (uint64_t vc = vc0; tried < max_tries; vc++) {
    for (uint64_t b = 1; b <= builds_per_vc && tried < max_tries; b++, tried++) {
      std::cerr << "try vc_seed=" << vc << " build_seed=" << b << " ..." << std::flush;
      auto demo = build_modwrap_demo(vc, b);
      auto out = run_modwrap_demo(demo);
      std::cerr << " " << out.detail << "\n";
      if (out.fired) {
        std::cout << "FIRED vc_seed=" << vc << " build_seed=" << b
                  << " updates=" << demo.updates.size()
                  << " cover=" << out.outcome.cover.size()
                  << " uncovered=" << out.audit.uncovered_edges
                  << " missed_pairs=" << out.audit.counter_missed_pairs << "\n";
        return 0;
      }
    }
  }
  std::cout << "no firing pair in " << max_tries << " tries\n";
  return 1;
}
