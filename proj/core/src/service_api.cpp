#include "bayesassist/service_api.hpp"

#include "bayesassist/elicitation.hpp"
#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ApiResponse json_response(int status, const Json& body) {
  return {status, "application/json", body.dump()};
}

Json parse_body(const std::string& body) {
  try {
    Json j = Json::parse(body);
    if (!j.is_object()) throw BadRequest("request body must be a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON: ") + e.what());
  }
}

// "/session/abc/step" -> {"session", "abc", "step"}
std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start < path.size()) {
    if (path[start] == '/') {
      ++start;
      continue;
    }
    const std::size_t end = path.find('/', start);
    parts.push_back(path.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end;
  }
  return parts;
}

bool truthy(const std::string& v) { return v == "1" || v == "true" || v == "yes"; }

ApiResponse drag(const Json& body, const TextCatalog& text) {
  const double point = require_number(body, "point_estimate");
  const double kappa = body.contains("kappa") ? require_number(body, "kappa") : 2.0;
  ElicitationState state = restore_elicitation(point, kappa, text);
  if (body.contains("handle")) {
    state = drag_handle(state, parse_handle(require_string(body, "handle")),
                        require_number(body, "value"), text);
  }
  return json_response(200, elicitation_response(state));
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return 404;
    case ErrorCode::conflict:
    case ErrorCode::protocol_violation: return 409;
    case ErrorCode::invalid_input:
    case ErrorCode::fit_failure:
    case ErrorCode::not_converged: return 422;
    case ErrorCode::io_error: return 500;
  }
  return 500;
}

ServiceApi::ServiceApi(StudyService& service, const TextCatalog& text)
    : service_(service), text_(text) {}

ApiResponse ServiceApi::handle(const ApiRequest& request) {
  try {
    return route(request);
  } catch (const BadRequest& e) {
    return json_response(400, error_json("bad_request", e.what()));
  } catch (const Error& e) {
    return json_response(http_status(e.code()), error_json(error_code_name(e.code()), e.what()));
  } catch (const std::exception& e) {
    return json_response(500, error_json("internal", e.what()));
  }
}

ApiResponse ServiceApi::route(const ApiRequest& request) {
  const auto parts = split_path(request.path);
  const std::string& method = request.method;
  const auto wrong_method = [] {
    return json_response(405, error_json("method_not_allowed", "method not allowed"));
  };

  if (parts.size() == 1 && parts[0] == "session") {
    if (method != "POST") return wrong_method();
    const Json body = parse_body(request.body);
    const Assignment a = service_.assign_session(require_string(body, "participant_id"));
    Json steps = Json::array();
    for (StepKind k : required_steps(a.condition)) steps.push_back(to_string(k));
    return json_response(201, Json{{"participant_id", a.participant_id},
                                   {"condition", to_string(a.condition)},
                                   {"dataset", to_string(a.dataset)},
                                   {"steps", steps}});
  }
  if (parts.size() == 3 && parts[0] == "session" && parts[2] == "step") {
    if (method != "POST") return wrong_method();
    const StepAck ack = service_.record_step(parts[1], step_from_json(parse_body(request.body)));
    Json out{{"participant_id", parts[1]},
             {"recorded", to_string(ack.recorded)},
             {"complete", ack.complete}};
    out["next_step"] = ack.next ? Json(to_string(*ack.next)) : Json(nullptr);
    return json_response(200, out);
  }
  if (parts.size() == 3 && parts[0] == "session" && parts[2] == "stimulus") {
    if (method != "GET") return wrong_method();
    return json_response(200, Json(service_.stimulus(parts[1])));
  }
  if (parts.size() == 2 && parts[0] == "elicit" && parts[1] == "drag") {
    if (method != "POST") return wrong_method();
    return drag(parse_body(request.body), text_);
  }
  if (parts.size() == 1 && parts[0] == "export.csv") {
    if (method != "GET") return wrong_method();
    const auto it = request.query.find("include_excluded");
    const bool include = it != request.query.end() && truthy(it->second);
    return {200, "text/csv", service_.export_csv(include)};
  }
  return json_response(404, error_json("not_found", "no route for " + request.path));
}

}  // namespace bayesassist
