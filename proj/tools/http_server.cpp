#include "http_server.hpp"

#include <httplib.h>

#include "bayesassist/errors.hpp"

namespace bayesassist {

namespace {

void forward(ServiceApi& api, const httplib::Request& req, httplib::Response& res) {
  ApiRequest request{req.method, req.path, req.body, {}};
  for (const auto& [key, value] : req.params) request.query[key] = value;
  const ApiResponse response = api.handle(request);
  res.status = response.status;
  res.set_content(response.body, response.content_type);
}

}  // namespace

HttpServer::HttpServer(ServiceApi& api) : api_(api), server_(std::make_unique<httplib::Server>()) {
  const auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    forward(api_, req, res);
  };
  // SO_REUSEADDR only: the library default also sets SO_REUSEPORT, which lets
  // a second server bind the same port silently.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
  });
  server_->Get(R"(/.*)", handler);
  server_->Post(R"(/.*)", handler);
  server_->Put(R"(/.*)", handler);
  server_->Delete(R"(/.*)", handler);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) throw IoError("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() {
  listening_ = true;
  if (stop_requested_) return;
  server_->listen_after_bind();
}

void HttpServer::stop() {
  // httplib ignores a stop that arrives before its accept loop is running.
  stop_requested_ = true;
  if (listening_) server_->wait_until_ready();
  server_->stop();
}

}  // namespace bayesassist
