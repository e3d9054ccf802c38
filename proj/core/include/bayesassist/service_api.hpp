#pragma once

#include <map>
#include <string>

#include "bayesassist/study_service.hpp"

namespace bayesassist {

struct ApiRequest {
  std::string method;
  std::string path;
  std::string body;
  std::map<std::string, std::string> query;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Transport-independent routing of the study endpoints:
///   POST /session                    {"participant_id": ...}
///   POST /session/{id}/step          step payload
///   GET  /session/{id}/stimulus
///   POST /elicit/drag                {"point_estimate", "kappa"?, "handle"?, "value"?}
///   GET  /export.csv?include_excluded=true
/// Errors are JSON bodies: 400 malformed request, 404 unknown route or
/// participant, 409 conflict or protocol violation, 422 values the engine
/// rejects.
class ServiceApi {
 public:
  explicit ServiceApi(StudyService& service, const TextCatalog& text = TextCatalog::defaults());
  ApiResponse handle(const ApiRequest& request);

 private:
  ApiResponse route(const ApiRequest& request);

  StudyService& service_;
  TextCatalog text_;
};

int http_status(ErrorCode code);

}  // namespace bayesassist
