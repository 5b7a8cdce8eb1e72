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

#include "plt/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <array>
#include <cstring>

#include "plt/error.hpp"

namespace plt {
namespace {

constexpr int kIoTimeoutSeconds = 30;

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  ~Fd() {
    if (fd_ >= 0) ::close(fd_);
  }
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  int get() const { return fd_; }

 private:
  int fd_;
};

std::string sys_error(const std::string& what) { return what + ": " + std::strerror(errno); }

sockaddr_in resolve(const Endpoint& ep) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  if (const int rc = ::getaddrinfo(ep.host.c_str(), nullptr, &hints, &res); rc != 0) {
    throw Error(ErrorCode::IoError, "cannot resolve " + ep.host + ": " + ::gai_strerror(rc));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof(addr));
  ::freeaddrinfo(res);
  addr.sin_port = htons(ep.port);
  return addr;
}

void set_timeouts(int fd) {
  timeval tv{};
  tv.tv_sec = kIoTimeoutSeconds;
  ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
  ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof(tv));
}

void write_all(int fd, std::span<const std::uint8_t> bytes) {
  std::size_t done = 0;
  while (done < bytes.size()) {
    const ssize_t n = ::send(fd, bytes.data() + done, bytes.size() - done, MSG_NOSIGNAL);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw Error(ErrorCode::IoError, sys_error("send"));
    done += static_cast<std::size_t>(n);
  }
}

void read_exact(int fd, std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t n = ::recv(fd, out.data() + done, out.size() - done, 0);
    if (n < 0 && errno == EINTR) continue;
    if (n == 0) {
      throw Error(ErrorCode::MalformedPayload,
                  "connection closed after " + std::to_string(done) + " of " +
                      std::to_string(out.size()) + " bytes");
    }
    if (n < 0) throw Error(ErrorCode::IoError, sys_error("recv"));
    done += static_cast<std::size_t>(n);
  }
}

Frame read_frame(int fd) {
  std::array<std::uint8_t, 4> prefix{};
  read_exact(fd, prefix);
  std::vector<std::uint8_t> body(frame_body_length(prefix));
  read_exact(fd, body);
  return decode_frame_body(body);
}

}  // namespace

Endpoint parse_endpoint(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0) {
    throw Error(ErrorCode::ParseError, "endpoint must look like host:port, got '" + text + "'");
  }
  unsigned port = 0;
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, port);
  if (first == last || ec != std::errc() || ptr != last || port > 65535) {
    throw Error(ErrorCode::ParseError, "bad port in '" + text + "'");
  }
  return Endpoint{text.substr(0, colon), static_cast<std::uint16_t>(port)};
}

Frame handle_request(const FqMatrix& x, const Frame& request) {
  try {
    if (request.kind != FrameKind::kQuery) {
      throw Error(ErrorCode::MalformedPayload, "expected a query frame at byte 4");
    }
    const Query query = decode_query(request.payload);
    Frame reply{FrameKind::kAnswer, encode_answer(answer(query, x))};
    if (reply.payload.size() + 1 > kMaxFrameBytes) {
      throw Error(ErrorCode::FrameTooLarge, "answer exceeds the 64 MiB frame cap");
    }
    return reply;
  } catch (const Error& e) {
    return error_frame(e.what());
  } catch (const std::exception& e) {
    return error_frame(std::string("ServerError: ") + e.what());
  }
}

Server::Server(MessageStore store, const Endpoint& listen)
    : store_(std::make_shared<const MessageStore>(std::move(store))), host_(listen.host) {
  const sockaddr_in addr = resolve(listen);
  listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (listen_fd_ < 0) throw Error(ErrorCode::IoError, sys_error("socket"));
  const int one = 1;
  ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  if (::bind(listen_fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0 ||
      ::listen(listen_fd_, 64) != 0) {
    const std::string msg = sys_error("cannot listen on " + listen.to_string());
    ::close(listen_fd_);
    throw Error(ErrorCode::IoError, msg);
  }
  sockaddr_in bound{};
  socklen_t len = sizeof(bound);
  ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&bound), &len);
  port_ = ntohs(bound.sin_port);
}

Server::~Server() {
  stop();
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

void Server::run(std::size_t max_requests) {
  std::size_t served = 0;
  while (!stopping_ && (max_requests == 0 || served < max_requests)) {
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR || errno == ECONNABORTED) continue;
      break;  // listening socket shut down by stop()
    }
    ++served;
    std::lock_guard<std::mutex> lock(workers_mu_);
    workers_.emplace_back([this, fd] { serve_connection(fd); });
  }
  std::vector<std::thread> done;
  {
    std::lock_guard<std::mutex> lock(workers_mu_);
    done.swap(workers_);
  }
  for (auto& w : done) w.join();
}

void Server::start() {
  acceptor_ = std::thread([this] { run(); });
}

void Server::stop() {
  if (!stopping_.exchange(true)) ::shutdown(listen_fd_, SHUT_RDWR);
  if (acceptor_.joinable()) acceptor_.join();
}

void Server::serve_connection(int raw_fd) const {
  const Fd fd(raw_fd);
  set_timeouts(fd.get());
  Frame reply{FrameKind::kError, {}};
  try {
    reply = handle_request(store_->X, read_frame(fd.get()));
  } catch (const Error& e) {
    reply = error_frame(e.what());
  }
  try {
    write_all(fd.get(), encode_frame(reply));
  } catch (const Error&) {
    // The client went away; nothing left to tell it.
  }
}

Answer fetch(const Endpoint& endpoint, const Query& query) {
  const sockaddr_in addr = resolve(endpoint);
  const Fd fd(::socket(AF_INET, SOCK_STREAM, 0));
  if (fd.get() < 0) throw Error(ErrorCode::IoError, sys_error("socket"));
  if (::connect(fd.get(), reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    if (errno == ECONNREFUSED) {
      throw Error(ErrorCode::ConnectionRefused, "nothing listening on " + endpoint.to_string());
    }
    throw Error(ErrorCode::IoError, sys_error("connect to " + endpoint.to_string()));
  }
  set_timeouts(fd.get());
  write_all(fd.get(), encode_frame(Frame{FrameKind::kQuery, encode_query(query)}));
  const Frame reply = read_frame(fd.get());
  switch (reply.kind) {
    case FrameKind::kAnswer:
      return decode_answer(reply.payload, query.G.field());
    case FrameKind::kError:
      raise_error_payload(reply.payload);
    default:
      throw Error(ErrorCode::MalformedPayload, "server sent a query frame at byte 4");
  }
}

}  // namespace plt
