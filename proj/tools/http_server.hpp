#pragma once

#include <atomic>
#include <memory>
#include <string>

#include "bayesassist/service_api.hpp"

namespace httplib {
class Server;
}

namespace bayesassist {

/// Binds ServiceApi to an HTTP listener.
class HttpServer {
 public:
  explicit HttpServer(ServiceApi& api);
  ~HttpServer();

  /// Binds to host:port (port 0 picks a free port) and returns the bound
  /// port. Throws IoError if binding fails.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called. Blocks.
  void listen();
  /// Safe to call from another thread, also before listen() has started.
  void stop();

 private:
  ServiceApi& api_;
  std::unique_ptr<httplib::Server> server_;
  std::atomic<bool> listening_{false};
  std::atomic<bool> stop_requested_{false};
};

}  // namespace bayesassist
