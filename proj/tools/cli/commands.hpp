#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace bayesassist::cli {

struct Common {
  std::string input = "-";
  std::string output = "-";
  double mass = 0.95;
  std::optional<std::uint64_t> seed;
};

struct FitOptions {
  Common io;
};

struct UpdateOptions {
  Common io;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::uint64_t> successes;
  std::optional<std::uint64_t> sample_size;
  bool include_excluded = false;
};

struct AssistOptions {
  Common io;
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<std::uint64_t> successes;
  std::optional<std::uint64_t> sample_size;
  std::string dataset;
  std::string kind = "both";
  std::string text_path;
};

struct EvaluateOptions {
  Common io;
  std::string summary_path;
  bool include_excluded = false;
};

struct RegressOptions {
  Common io;
  std::string diagnostics_path;
  std::string dataset;
  int chains = 4;
  int warmup = 2000;
  int draws = 2500;
  bool sequential = false;
};

struct AggregateOptions {
  Common io;
  std::string dataset;
  std::size_t resamples = 10000;
  bool include_excluded = false;
};

struct SimulateOptions {
  Common io;
  std::string rule = "bayesian";
  std::size_t participants = 100;
  std::string dataset = "dementia_small";
  std::string condition = "uncertainty_vis";
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::uint64_t seed = 0;
  std::string data_dir;
  std::string text_path;
};

void run_fit(const FitOptions& o);
void run_update(const UpdateOptions& o);
void run_assist(const AssistOptions& o);
void run_evaluate(const EvaluateOptions& o);
void run_regress(const RegressOptions& o);
void run_aggregate(const AggregateOptions& o);
void run_simulate(const SimulateOptions& o);
void run_serve(const ServeOptions& o);

}  // namespace bayesassist::cli
