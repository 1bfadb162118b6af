#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rca::cli {

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2 };

struct Bounds {
  std::size_t maxObjects = 20;
  std::size_t maxFeatures = 20;
  std::size_t maxConcepts = 4096;
  std::size_t maxLattice = 64;
  std::uint64_t maxEvaluations = 10'000'000;
};

struct RunConfig {
  std::uint64_t seed = 0;
  Bounds bounds;
  std::size_t jobs = 1;
  bool json = false;
};

/// Worker count from RCA_JOBS, else the hardware concurrency.
std::size_t defaultJobs();

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CampaignOptions {
  std::string suite = "all";
  std::size_t count = 100;
  std::size_t maxSize = 8;
  std::string outDir = "counterexamples";
  bool writeFiles = true;
};

int runCampaign(const RunConfig& cfg, const CampaignOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace rca::cli
