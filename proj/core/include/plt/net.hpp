// Copyright 2026 The PLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// TCP transport: one query per connection, one thread per connection.

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "plt/query.hpp"
#include "plt/store.hpp"
#include "plt/wire.hpp"

namespace plt {

struct Endpoint {
  std::string host;
  std::uint16_t port = 0;

  std::string to_string() const { return host + ":" + std::to_string(port); }
};

// "host:port". Throws ParseError.
Endpoint parse_endpoint(const std::string& text);

// Turns one request frame into the response frame. Never throws: failures
// become error frames.
Frame handle_request(const FqMatrix& x, const Frame& request);

class Server {
 public:
  // Binds and listens immediately; port 0 picks an ephemeral port.
  // Throws IoError.
  Server(MessageStore store, const Endpoint& listen);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  std::uint16_t port() const { return port_; }
  Endpoint endpoint() const { return Endpoint{host_, port_}; }

  // Accept loop. Returns after stop(), or after max_requests connections
  // when that is nonzero.
  void run(std::size_t max_requests = 0);
  void start();  // run() on a background thread
  void stop();

 private:
  void serve_connection(int fd) const;

  std::shared_ptr<const MessageStore> store_;
  std::string host_;
  std::uint16_t port_ = 0;
  int listen_fd_ = -1;
  std::atomic<bool> stopping_{false};
  std::thread acceptor_;
  std::mutex workers_mu_;
  std::vector<std::thread> workers_;
};

// Throws ConnectionRefused, FrameTooLarge, MalformedPayload, IoError, or the
// error carried by an error frame.
Answer fetch(const Endpoint& endpoint, const Query& query);

}  // namespace plt
