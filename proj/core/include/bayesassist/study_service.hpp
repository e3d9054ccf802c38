#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bayesassist/assistance.hpp"
#include "bayesassist/serialization.hpp"
#include "bayesassist/study.hpp"
#include "bayesassist/text_catalog.hpp"

namespace bayesassist {

enum class StepKind { intro, prior, stimulus, assistance, posterior, post_task };

std::string_view to_string(StepKind kind);
StepKind parse_step_kind(std::string_view text);

/// Steps a session in `condition` must record, in order.
std::vector<StepKind> required_steps(Condition condition);

struct PostTaskAnswers {
  int trust_rating = kTrustMin;
  Demographics demographics;
  ExclusionAnswer exclusion_answer = ExclusionAnswer::between_30_60;
};

/// One submitted screen. `interval` is set for prior and posterior steps,
/// `post_task` for the post-task step.
struct StepPayload {
  StepKind kind = StepKind::intro;
  std::optional<ElicitedInterval> interval;
  std::optional<PostTaskAnswers> post_task;
};

/// {"step": "prior", "interval": {...}} / {"step": "post_task", "trust_rating":
/// 4, "demographics": {...}, "exclusion_answer": "between_30_60"}.
StepPayload step_from_json(const Json& j);
Json step_to_json(const StepPayload& step);

/// What the data screen shows. Interval conditions carry the likelihood
/// density and its 95% interval; point conditions carry the point and a
/// sample-size caption. Assistance conditions carry the analogy or the
/// predicted posterior once a prior is known.
struct StimulusSpec {
  Dataset dataset = Dataset::dementia_small;
  Condition condition = Condition::uncertainty_vis;
  double proportion = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t sample_size = 1;
  std::string description_text;

  struct LikelihoodPayload {
    std::vector<DensityPoint> density_points;
    CredibleInterval interval_95;
  };
  struct PointPayload {
    double point = 0.0;
    std::string caption;
  };
  std::optional<LikelihoodPayload> likelihood_payload;
  std::optional<PointPayload> point_payload;
  std::optional<Analogy> analogy;
  std::optional<PosteriorVisPayload> posterior_vis;
};

StimulusSpec make_stimulus(Dataset dataset, Condition condition,
                           const std::optional<BetaBelief>& prior,
                           const TextCatalog& text = TextCatalog::defaults());
void to_json(Json& j, const StimulusSpec& s);

struct Assignment {
  std::string participant_id;
  Condition condition = Condition::uncertainty_vis;
  Dataset dataset = Dataset::dementia_small;
};

struct StepAck {
  StepKind recorded = StepKind::intro;
  std::optional<StepKind> next;
  bool complete = false;
};

enum class SessionStatus { in_progress, complete, incomplete };
std::string_view to_string(SessionStatus status);

/// Epoch milliseconds.
using Clock = std::function<std::int64_t()>;
std::int64_t system_clock_ms();

struct ServiceConfig {
  /// Directory holding the event log; empty keeps everything in memory.
  std::filesystem::path data_dir;
  std::uint64_t seed = 0;
  std::int64_t timeout_ms = 60LL * 60 * 1000;
};

/// Runs study sessions. Every accepted assignment and step is appended to
/// `events.jsonl` in the data directory before it takes effect, and the log
/// is replayed on construction. All public members are serialised by one
/// mutex.
class StudyService {
 public:
  explicit StudyService(ServiceConfig config, Clock clock = system_clock_ms,
                        const TextCatalog& text = TextCatalog::defaults());

  /// Least-filled cell of the condition x dataset grid; ties broken by a
  /// generator seeded from (seed, number of prior assignments). Throws
  /// Conflict for a reused id and InvalidInput for an unusable one.
  Assignment assign_session(const std::string& participant_id);

  /// Throws NotFound for an unknown id, ProtocolViolation for a step out of
  /// order or after the session timed out, InvalidInput for a payload that
  /// does not fit the step.
  StepAck record_step(const std::string& participant_id, const StepPayload& step);

  StimulusSpec stimulus(const std::string& participant_id) const;
  SessionStatus status(const std::string& participant_id) const;
  Assignment assignment(const std::string& participant_id) const;

  /// Completed sessions in assignment order.
  std::vector<TrialRecord> records(bool include_excluded = false) const;
  std::string export_csv(bool include_excluded = false) const;

  /// Assignments per [condition][dataset].
  std::array<std::array<std::size_t, 4>, 6> cell_counts() const;
  std::size_t session_count() const;

 private:
  struct Session {
    Assignment assignment;
    std::int64_t assigned_at = 0;
    std::vector<std::pair<StepPayload, std::int64_t>> steps;
    std::optional<ElicitedBelief> prior;
    std::optional<ElicitedBelief> posterior;
    std::optional<PostTaskAnswers> post_task;
  };

  Assignment assign_locked(const std::string& participant_id, std::int64_t now,
                           const std::optional<Assignment>& replayed);
  StepAck record_locked(const std::string& participant_id, const StepPayload& step,
                        std::int64_t now, bool replaying);
  const Session& find(const std::string& participant_id) const;
  SessionStatus status_locked(const Session& s, std::int64_t now) const;
  TrialRecord to_record(const Session& s) const;
  void append_event(const Json& event);
  void replay();

  ServiceConfig config_;
  Clock clock_;
  TextCatalog text_;
  mutable std::mutex mutex_;
  std::map<std::string, Session> sessions_;
  std::vector<std::string> order_;
  std::array<std::array<std::size_t, 4>, 6> counts_{};
  std::ofstream log_;
};

}  // namespace bayesassist
