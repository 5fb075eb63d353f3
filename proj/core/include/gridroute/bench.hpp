#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "gridroute/instance.hpp"
#include "gridroute/potential.hpp"

namespace gridroute {

// One net routed under one potential flavor.
struct BenchRow {
  std::string chip;
  std::string net;
  Flavor flavor = Flavor::kZero;
  std::int64_t prep_us = 0;
  std::int64_t search_us = 0;
  std::int64_t labeled = 0;
  std::int64_t popped = 0;
  Cost cost = -1;  // -1 when the net could not be fully connected
};

struct BenchConfig {
  std::vector<Flavor> flavors = {Flavor::kZero, Flavor::kL1, Flavor::kSimple, Flavor::kGeneral};
  bool incremental = false;  // discount own reservations, block other nets'
  bool timing = true;        // false zeroes the microsecond columns
};

// Routes every net under every requested flavor and reports label counts.
// In incremental mode each net sees its own reservations at the instance
// discount and loses the edges other nets reserved.  A net that cannot be
// connected shows up with cost -1 instead of aborting the run.  All flavors
// that do connect a net report the same cost; only the work differs.
std::vector<BenchRow> run_benchmark(const Instance& inst, const std::string& chip,
                                    const BenchConfig& cfg);

// Fixed-format CSV: chip,net,flavor,prep_us,search_us,labeled,popped,cost.
// The header is always written, so a zero-net instance yields a header-only
// file.
void write_csv(const std::vector<BenchRow>& rows, std::ostream& os);

}  // namespace gridroute
