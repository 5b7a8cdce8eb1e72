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

#include <future>

#include "plt/fixtures.hpp"
#include "plt/protocol.hpp"
#include "plt/store.hpp"
#include "plt/wire.hpp"
#include "support.hpp"

namespace plt {
namespace {

const PrimeField kF17(17);

MessageStore store_for(std::size_t K, std::size_t N, std::uint64_t seed) {
  Rng rng(seed);
  return random_store(kF17, K, N, rng);
}

TEST(Net, ParsesEndpoints) {
  const Endpoint e = parse_endpoint("127.0.0.1:8080");
  EXPECT_EQ(e.host, "127.0.0.1");
  EXPECT_EQ(e.port, 8080);
  EXPECT_EQ(e.to_string(), "127.0.0.1:8080");
  EXPECT_PLT_ERROR(parse_endpoint("localhost"), ErrorCode::ParseError);
  EXPECT_PLT_ERROR(parse_endpoint("localhost:99999"), ErrorCode::ParseError);
  EXPECT_PLT_ERROR(parse_endpoint("localhost:x"), ErrorCode::ParseError);
}

TEST(Net, HandleRequestNeverThrows) {
  const MessageStore s = store_for(4, 2, 1);
  const Frame bad_kind = handle_request(s.X, Frame{FrameKind::kAnswer, {}});
  EXPECT_EQ(bad_kind.kind, FrameKind::kError);
  const Frame garbage = handle_request(s.X, Frame{FrameKind::kQuery, {1, 2, 3}});
  EXPECT_EQ(garbage.kind, FrameKind::kError);
  const std::string text(garbage.payload.begin(), garbage.payload.end());
  EXPECT_EQ(text.rfind("MalformedPayload: ", 0), 0u) << text;
}

TEST(Net, LoopbackMatchesInProcessOnWorkedExamples) {
  for (int which = 1; which <= 3; ++which) {
    const ExampleFixture fx = example_fixture(which);
    const MessageStore s = store_for(24, 3, 100 + which);
    Server server(s, Endpoint{"127.0.0.1", 0});
    server.start();
    const Answer remote = fetch(server.endpoint(), fx.query);
    const Answer local = answer(fx.query, s.X);
    EXPECT_EQ(encode_answer(remote), encode_answer(local)) << "example " << which;
    server.stop();
  }
}

TEST(Net, LoopbackRecoversTheDemand) {
  const ExampleFixture fx = example_fixture(2);
  const MessageStore s = store_for(24, 4, 7);
  Server server(s, Endpoint{"127.0.0.1", 0});
  server.start();
  const Answer a = fetch(server.endpoint(), fx.query);
  EXPECT_EQ(recover(a, fx.secret, fx.params, fx.demand), demand_value(fx.demand, s.X));
}

TEST(Net, MismatchedKComesBackAsShapeError) {
  Server server(store_for(24, 1, 2), Endpoint{"127.0.0.1", 0});
  server.start();
  Rng rng(3);
  const Query q{testing::random_matrix(kF17, 2, 23, rng), rng.permutation(23)};
  EXPECT_PLT_ERROR(fetch(server.endpoint(), q), ErrorCode::ShapeError);
}

TEST(Net, ConcurrentClients) {
  const MessageStore s = store_for(24, 3, 4);
  Server server(s, Endpoint{"127.0.0.1", 0});
  server.start();
  const auto params = derive_params(24, 9, 2, 17);
  std::vector<std::future<bool>> results;
  for (int client = 0; client < 8; ++client) {
    results.push_back(std::async(std::launch::async, [&, client] {
      Rng rng(50 + client);
      const Demand d = random_demand(params, rng);
      const QueryBundle qb = build_query(d, params, rng);
      const Answer a = fetch(server.endpoint(), qb.query);
      return encode_answer(a) == encode_answer(answer(qb.query, s.X)) &&
             recover(a, qb.secret, params, d) == demand_value(d, s.X);
    }));
  }
  for (auto& r : results) EXPECT_TRUE(r.get());
}

TEST(Net, RefusedConnection) {
  std::uint16_t port = 0;
  {
    Server probe(store_for(2, 1, 5), Endpoint{"127.0.0.1", 0});
    port = probe.port();
  }
  const Query q{FqMatrix(kF17, 1, 2), {0, 1}};
  EXPECT_PLT_ERROR(fetch(Endpoint{"127.0.0.1", port}, q), ErrorCode::ConnectionRefused);
}

TEST(Net, RunStopsAfterMaxRequests) {
  const MessageStore s = store_for(3, 1, 6);
  Server server(s, Endpoint{"127.0.0.1", 0});
  const Endpoint ep = server.endpoint();
  std::thread runner([&] { server.run(2); });
  const Query q{FqMatrix::identity(kF17, 3), {2, 0, 1}};
  EXPECT_EQ(fetch(ep, q).Y, permute_rows(s.X, q.pi));
  EXPECT_EQ(fetch(ep, q).Y, permute_rows(s.X, q.pi));
  runner.join();
}

}  // namespace
}  // namespace plt
