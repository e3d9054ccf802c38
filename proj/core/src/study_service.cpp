#include "bayesassist/study_service.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>

#include "bayesassist/errors.hpp"
#include "bayesassist/fit.hpp"
#include "bayesassist/interval.hpp"
#include "bayesassist/records_csv.hpp"
#include "bayesassist/updating.hpp"

namespace bayesassist {

namespace {

constexpr std::array<std::string_view, 6> kStepNames{"intro",      "prior",     "stimulus",
                                                     "assistance", "posterior", "post_task"};
constexpr std::size_t kMaxParticipantIdLength = 128;
constexpr std::string_view kEventLogName = "events.jsonl";

void check_participant_id(const std::string& id) {
  if (id.empty() || id.size() > kMaxParticipantIdLength) {
    throw InvalidInput("participant_id must be 1-128 characters");
  }
  for (unsigned char c : id) {
    if (!(std::isalnum(c) || c == '-' || c == '_' || c == '.')) {
      throw InvalidInput("participant_id may contain only letters, digits, '-', '_' and '.'");
    }
  }
}

std::string count_text(std::uint64_t n) { return std::to_string(n); }

}  // namespace

std::string_view to_string(StepKind kind) { return kStepNames[static_cast<int>(kind)]; }

StepKind parse_step_kind(std::string_view text) {
  for (std::size_t i = 0; i < kStepNames.size(); ++i) {
    if (kStepNames[i] == text) return static_cast<StepKind>(i);
  }
  throw InvalidInput("unknown step '" + std::string(text) + "'");
}

std::vector<StepKind> required_steps(Condition condition) {
  std::vector<StepKind> steps{StepKind::intro};
  if (is_elicitation_condition(condition)) steps.push_back(StepKind::prior);
  steps.push_back(StepKind::stimulus);
  if (is_assistance_condition(condition)) steps.push_back(StepKind::assistance);
  steps.push_back(StepKind::posterior);
  steps.push_back(StepKind::post_task);
  return steps;
}

StepPayload step_from_json(const Json& j) {
  StepPayload step;
  step.kind = parse_step_kind(require_string(j, "step"));
  switch (step.kind) {
    case StepKind::prior:
    case StepKind::posterior:
      if (!j.contains("interval")) throw InvalidInput("step needs an 'interval'");
      step.interval = interval_from_json(j.at("interval"));
      break;
    case StepKind::post_task: {
      PostTaskAnswers a;
      const double trust = require_number(j, "trust_rating");
      if (trust != std::floor(trust) || trust < kTrustMin || trust > kTrustMax) {
        throw InvalidInput("trust_rating must be an integer from 1 to 5");
      }
      a.trust_rating = static_cast<int>(trust);
      a.exclusion_answer = parse_exclusion_answer(require_string(j, "exclusion_answer"));
      if (j.contains("demographics")) {
        const Json& d = j.at("demographics");
        if (!d.is_object()) throw InvalidInput("demographics must be an object");
        if (d.contains("gender")) a.demographics.gender = require_string(d, "gender");
        if (d.contains("education")) a.demographics.education = require_string(d, "education");
        if (d.contains("age_band")) a.demographics.age_band = require_string(d, "age_band");
      }
      step.post_task = a;
      break;
    }
    default: break;
  }
  return step;
}

Json step_to_json(const StepPayload& step) {
  Json j{{"step", to_string(step.kind)}};
  if (step.interval) j["interval"] = *step.interval;
  if (step.post_task) {
    j["trust_rating"] = step.post_task->trust_rating;
    j["exclusion_answer"] = to_string(step.post_task->exclusion_answer);
    j["demographics"] = {{"gender", step.post_task->demographics.gender},
                         {"education", step.post_task->demographics.education},
                         {"age_band", step.post_task->demographics.age_band}};
  }
  return j;
}

StimulusSpec make_stimulus(Dataset dataset, Condition condition,
                           const std::optional<BetaBelief>& prior, const TextCatalog& text) {
  const DatasetSpec spec = dataset_spec(dataset);
  const ObservedData data = spec.observed();
  StimulusSpec s;
  s.dataset = dataset;
  s.condition = condition;
  s.proportion = spec.proportion;
  s.successes = data.successes;
  s.sample_size = data.sample_size;
  const TextCatalog::Variables vars{{"successes", count_text(data.successes)},
                                    {"sample_size", count_text(data.sample_size)}};
  s.description_text = text.render("stimulus." + std::string(spec.topic), vars);
  if (is_point_condition(condition)) {
    s.point_payload = StimulusSpec::PointPayload{data.proportion(),
                                                 text.render("stimulus.point_caption", vars)};
  } else {
    const BetaBelief likelihood = likelihood_belief(data);
    s.likelihood_payload = StimulusSpec::LikelihoodPayload{
        density_on_support_window(likelihood), hdi(likelihood, kDefaultMass)};
  }
  if (prior) {
    if (condition == Condition::analogy) s.analogy = make_analogy(*prior, data, text);
    if (condition == Condition::posterior_vis) s.posterior_vis = make_posterior_vis(*prior, data, text);
  }
  return s;
}

void to_json(Json& j, const StimulusSpec& s) {
  j = Json{{"dataset", to_string(s.dataset)},
           {"condition", to_string(s.condition)},
           {"proportion", s.proportion},
           {"successes", s.successes},
           {"sample_size", s.sample_size},
           {"description_text", s.description_text}};
  if (s.likelihood_payload) {
    j["likelihood_payload"] = {{"density_points", s.likelihood_payload->density_points},
                               {"interval_95", s.likelihood_payload->interval_95}};
  }
  if (s.point_payload) {
    j["point_payload"] = {{"point", s.point_payload->point},
                          {"caption", s.point_payload->caption}};
  }
  if (s.analogy) j["analogy"] = *s.analogy;
  if (s.posterior_vis) j["posterior_vis"] = *s.posterior_vis;
}

std::string_view to_string(SessionStatus status) {
  switch (status) {
    case SessionStatus::in_progress: return "in_progress";
    case SessionStatus::complete: return "complete";
    case SessionStatus::incomplete: return "incomplete";
  }
  return "in_progress";
}

std::int64_t system_clock_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

StudyService::StudyService(ServiceConfig config, Clock clock, const TextCatalog& text)
    : config_(std::move(config)), clock_(std::move(clock)), text_(text) {
  if (!clock_) throw InvalidInput("study service needs a clock");
  if (config_.timeout_ms <= 0) throw InvalidInput("session timeout must be positive");
  if (!config_.data_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config_.data_dir, ec);
    if (ec) throw IoError("cannot create data directory " + config_.data_dir.string());
    replay();
    log_.open(config_.data_dir / kEventLogName, std::ios::app);
    if (!log_) throw IoError("cannot open event log in " + config_.data_dir.string());
  }
}

void StudyService::append_event(const Json& event) {
  if (!log_.is_open()) return;
  log_ << event.dump() << '\n';
  log_.flush();
  if (!log_) throw IoError("failed to append to the event log");
}

void StudyService::replay() {
  const auto path = config_.data_dir / kEventLogName;
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const Json e = Json::parse(line);
      const std::string kind = require_string(e, "event");
      const std::string id = require_string(e, "participant_id");
      const auto time = static_cast<std::int64_t>(require_number(e, "time"));
      if (kind == "assign") {
        const Assignment a{id, parse_condition(require_string(e, "condition")),
                           parse_dataset(require_string(e, "dataset"))};
        assign_locked(id, time, a);
      } else if (kind == "step") {
        record_locked(id, step_from_json(e.at("step")), time, true);
      } else {
        throw InvalidInput("unknown event '" + kind + "'");
      }
    } catch (const std::exception& ex) {
      throw IoError("event log " + path.string() + " line " + std::to_string(line_no) + ": " +
                    ex.what());
    }
  }
}

Assignment StudyService::assign_session(const std::string& participant_id) {
  std::lock_guard lock(mutex_);
  return assign_locked(participant_id, clock_(), std::nullopt);
}

Assignment StudyService::assign_locked(const std::string& participant_id, std::int64_t now,
                                       const std::optional<Assignment>& replayed) {
  check_participant_id(participant_id);
  if (sessions_.contains(participant_id)) {
    throw Conflict("participant_id '" + participant_id + "' is already in use");
  }
  Assignment a;
  if (replayed) {
    a = *replayed;
  } else {
    std::size_t fewest = SIZE_MAX;
    for (const auto& row : counts_) {
      for (std::size_t c : row) fewest = std::min(fewest, c);
    }
    std::vector<std::pair<int, int>> open;
    for (int c = 0; c < 6; ++c) {
      for (int d = 0; d < 4; ++d) {
        if (counts_[c][d] == fewest) open.emplace_back(c, d);
      }
    }
    const std::uint64_t index = order_.size();
    std::seed_seq seq{static_cast<std::uint32_t>(config_.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(config_.seed >> 32),
                      static_cast<std::uint32_t>(index & 0xffffffffu),
                      static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const auto [c, d] = open[pick(rng)];
    a = Assignment{participant_id, kAllConditions[c], kAllDatasets[d]};
    append_event(Json{{"event", "assign"},
                      {"participant_id", participant_id},
                      {"condition", to_string(a.condition)},
                      {"dataset", to_string(a.dataset)},
                      {"time", now}});
  }
  Session s;
  s.assignment = a;
  s.assigned_at = now;
  sessions_.emplace(participant_id, std::move(s));
  order_.push_back(participant_id);
  ++counts_[static_cast<int>(a.condition)][static_cast<int>(a.dataset)];
  return a;
}

StepAck StudyService::record_step(const std::string& participant_id, const StepPayload& step) {
  std::lock_guard lock(mutex_);
  return record_locked(participant_id, step, clock_(), false);
}

StepAck StudyService::record_locked(const std::string& participant_id, const StepPayload& step,
                                    std::int64_t now, bool replaying) {
  const auto it = sessions_.find(participant_id);
  if (it == sessions_.end()) throw NotFound("unknown participant '" + participant_id + "'");
  Session& s = it->second;
  const auto required = required_steps(s.assignment.condition);
  const SessionStatus st = status_locked(s, now);
  if (st == SessionStatus::complete) throw ProtocolViolation("session is already complete");
  if (st == SessionStatus::incomplete) throw ProtocolViolation("session timed out");

  const StepKind expected = required[s.steps.size()];
  if (step.kind != expected) {
    throw ProtocolViolation("expected step '" + std::string(to_string(expected)) + "', got '" +
                            std::string(to_string(step.kind)) + "'");
  }
  const bool wants_interval = step.kind == StepKind::prior || step.kind == StepKind::posterior;
  if (wants_interval != step.interval.has_value()) {
    throw InvalidInput("step '" + std::string(to_string(step.kind)) +
                       (wants_interval ? "' needs an interval" : "' takes no interval"));
  }
  if ((step.kind == StepKind::post_task) != step.post_task.has_value()) {
    throw InvalidInput("post-task answers belong to the post_task step only");
  }
  std::optional<ElicitedBelief> fitted;
  if (step.interval) fitted = elicit(*step.interval);
  if (step.post_task) {
    const int t = step.post_task->trust_rating;
    if (t < kTrustMin || t > kTrustMax) throw InvalidInput("trust_rating must be 1-5");
  }

  if (!replaying) {
    append_event(Json{{"event", "step"},
                      {"participant_id", participant_id},
                      {"step", step_to_json(step)},
                      {"time", now}});
  }
  s.steps.emplace_back(step, now);
  if (step.kind == StepKind::prior) s.prior = fitted;
  if (step.kind == StepKind::posterior) s.posterior = fitted;
  if (step.post_task) s.post_task = step.post_task;

  StepAck ack;
  ack.recorded = step.kind;
  ack.complete = s.steps.size() == required.size();
  if (!ack.complete) ack.next = required[s.steps.size()];
  return ack;
}

const StudyService::Session& StudyService::find(const std::string& participant_id) const {
  const auto it = sessions_.find(participant_id);
  if (it == sessions_.end()) throw NotFound("unknown participant '" + participant_id + "'");
  return it->second;
}

SessionStatus StudyService::status_locked(const Session& s, std::int64_t now) const {
  if (s.steps.size() == required_steps(s.assignment.condition).size()) {
    return SessionStatus::complete;
  }
  return now - s.assigned_at > config_.timeout_ms ? SessionStatus::incomplete
                                                  : SessionStatus::in_progress;
}

StimulusSpec StudyService::stimulus(const std::string& participant_id) const {
  std::lock_guard lock(mutex_);
  const Session& s = find(participant_id);
  std::optional<BetaBelief> prior;
  if (s.prior) prior = s.prior->fitted;
  return make_stimulus(s.assignment.dataset, s.assignment.condition, prior, text_);
}

SessionStatus StudyService::status(const std::string& participant_id) const {
  std::lock_guard lock(mutex_);
  return status_locked(find(participant_id), clock_());
}

Assignment StudyService::assignment(const std::string& participant_id) const {
  std::lock_guard lock(mutex_);
  return find(participant_id).assignment;
}

TrialRecord StudyService::to_record(const Session& s) const {
  TrialRecord r;
  r.participant_id = s.assignment.participant_id;
  r.condition = s.assignment.condition;
  r.dataset = s.assignment.dataset;
  r.prior = s.prior;
  r.posterior = *s.posterior;
  r.trust_rating = s.post_task->trust_rating;
  r.demographics = s.post_task->demographics;
  r.exclusion_answer = s.post_task->exclusion_answer;
  for (const auto& [step, time] : s.steps) r.timestamps.emplace_back(to_string(step.kind), time);
  r.validate();
  return r;
}

std::vector<TrialRecord> StudyService::records(bool include_excluded) const {
  std::lock_guard lock(mutex_);
  std::vector<TrialRecord> out;
  for (const auto& id : order_) {
    const Session& s = sessions_.at(id);
    if (s.steps.size() != required_steps(s.assignment.condition).size()) continue;
    TrialRecord r = to_record(s);
    if (r.excluded() && !include_excluded) continue;
    out.push_back(std::move(r));
  }
  return out;
}

std::string StudyService::export_csv(bool include_excluded) const {
  const auto rows = records(include_excluded);
  std::ostringstream out;
  write_trial_records(out, rows);
  return out.str();
}

std::array<std::array<std::size_t, 4>, 6> StudyService::cell_counts() const {
  std::lock_guard lock(mutex_);
  return counts_;
}

std::size_t StudyService::session_count() const {
  std::lock_guard lock(mutex_);
  return order_.size();
}

}  // namespace bayesassist
