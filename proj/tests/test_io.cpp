// Copyright 2026 The discord-dynamics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "discord/errors.hpp"
#include "discord/io.hpp"
#include "discord/random.hpp"

using namespace discord;
using io::json;

TEST_CASE("density matrix json round trip") {
  sample::Rng rng(41);
  const DensityMatrix rho = sample::density(rng, 4);
  const DensityMatrix back = io::density_from_json(json::parse(io::to_json(rho).dump()));
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-15);

  json j = io::to_json(rho);
  j.erase("im");
  j["re"] = {{0.5, 0.0}, {0.0, 0.5}};
  j["dim"] = 2;
  CHECK(io::density_from_json(j).dim() == 2);

  j["dim"] = 3;
  CHECK_THROWS_AS(io::density_from_json(j), ValidationError);
  j["dim"] = 2;
  j["re"] = {{0.5, 0.0}};
  CHECK_THROWS_AS(io::density_from_json(j), ValidationError);
}

TEST_CASE("state dispatch") {
  CHECK(std::holds_alternative<BellDiagonalState>(io::initial_state_from_json(json::parse(R"({"c":[0.1,0.2,0.3]})"))));
  CHECK(std::holds_alternative<XStateRaw>(
      io::initial_state_from_json(json::parse(R"({"rho11":0.4,"rho22":0.1,"rho33":0.1,"rho44":0.4,"abs_rho14":0.2})"))));
  CHECK(std::holds_alternative<DensityMatrix>(
      io::initial_state_from_json(json::parse(R"({"dim":2,"re":[[1,0],[0,0]]})"))));
  CHECK_THROWS_AS(io::initial_state_from_json(json::parse(R"({"foo":1})")), ValidationError);
  CHECK_THROWS_AS(io::initial_state_from_json(json::parse(R"({"c":[1,1,1]})")), ValidationError);
  CHECK_THROWS_AS(io::initial_state_from_json(json::parse(R"({"c":[1,1]})")), ValidationError);

  const XStateRaw x{0.4, 0.1, 0.1, 0.4, 0.2, 0.05, 0.3, -0.2};
  const XStateRaw y = io::x_state_from_json(io::to_json(x));
  CHECK(y.phi23 == x.phi23);
  CHECK(y.abs_rho14 == x.abs_rho14);
}

TEST_CASE("channel specs") {
  SUBCASE("short forms") {
    const ChannelPair pd = io::parse_channel_spec("pd");
    CHECK(pd.kind_a == ChannelKind::phase_damping);
    CHECK(pd.kind_b == ChannelKind::phase_damping);
    const ChannelPair mixed = io::parse_channel_spec("bf/pf@0.8");
    CHECK(mixed.kind_a == ChannelKind::bit_flip);
    CHECK(mixed.kind_b == ChannelKind::phase_flip);
    CHECK(mixed.rate_ratio == 0.8);
    CHECK_THROWS_AS(io::parse_channel_spec("bf/pf@x"), ValidationError);
    CHECK_THROWS_AS(io::parse_channel_spec("bf/pf@2"), RangeError);
    CHECK_THROWS_AS(io::parse_channel_spec("amplitude"), ValidationError);
  }
  SUBCASE("json forms") {
    const ChannelPair a = io::parse_channel_spec(R"({"kind":"bpf","p":0.3})");
    CHECK(a.kind_a == ChannelKind::bit_phase_flip);
    const ChannelPair b = io::channel_from_json(json::parse(R"({"a":{"kind":"bf"},"b":{"kind":"pf"},"r":0.5})"));
    CHECK(b.rate_ratio == 0.5);
    const ChannelPair c = io::channel_from_json(io::to_json(b));
    CHECK(c.kind_b == ChannelKind::phase_flip);
    CHECK(c.rate_ratio == 0.5);
    CHECK_THROWS_AS(io::channel_from_json(json::parse(R"({"kind":"pd","p":1.5})")), RangeError);
    CHECK_THROWS_AS(io::channel_from_json(json::parse(R"({"a":{"kind":"pd"}})")), ValidationError);
    CHECK_THROWS_AS(io::parse_channel_spec("{not json"), ValidationError);
  }
}

TEST_CASE("csv round trip") {
  CorrelationCurve a{"mi", {0.0, 0.5, 1.0}, {1.0, 0.123456789012345, 0.0}, false};
  CorrelationCurve b{"oz", {0.0, 0.5, 1.0}, {0.3, 0.2, 1e-17}, false};
  std::stringstream ss;
  io::write_csv(ss, {a, b});
  const std::string text = ss.str();
  CHECK(text.rfind("p,mi,oz\n", 0) == 0);
  CHECK(text.find("0.123456789012") != std::string::npos);

  const auto back = io::read_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0].measure_id == "mi");
  CHECK(back[1].grid == a.grid);
  CHECK(back[0].values[1] == doctest::Approx(0.123456789012).epsilon(1e-12));

  CorrelationCurve off{"hv", {0.0, 0.4, 1.0}, {1, 2, 3}, true};
  std::stringstream bad;
  CHECK_THROWS_AS(io::write_csv(bad, {a, off}), ValidationError);

  std::stringstream short_row("p,mi\n0.1\n");
  CHECK_THROWS_AS(io::read_csv(short_row), ValidationError);
  std::stringstream bad_header("q,mi\n");
  CHECK_THROWS_AS(io::read_csv(bad_header), ValidationError);
}

TEST_CASE("report json") {
  SuddenChangeReport r;
  r.predicted.push_back({0.25, Mechanism::intermediate_switch, "tdd", false});
  r.detected.push_back({0.251, 12.0, "tdd"});
  r.freezing_intervals.push_back({0.3, 0.5, 0.1, "tdd"});
  r.regime = Regime::quantum_then_classical;
  const json j = io::to_json(r);
  CHECK(j["predicted"][0]["p_sc"] == 0.25);
  CHECK(j["predicted"][0]["mechanism"] == "intermediate_switch");
  CHECK(j["detected"][0]["measure"] == "tdd");
  CHECK(j["freezing_intervals"][0]["frozen_value"] == 0.1);
  CHECK(j["regime"] == "quantum_then_classical");
  CHECK(j["pointer_emergence_p"].is_null());
  r.pointer_emergence_p = 0.2;
  CHECK(io::to_json(r)["pointer_emergence_p"] == 0.2);
}

TEST_CASE("value formatting") {
  CHECK(io::format_value(0.1) == "0.1");
  CHECK(io::format_value(1.0 / 3.0) == "0.333333333333");
}
