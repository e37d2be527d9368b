#include <thread>

#include "doctest.h"
#include "oracles.hpp"

#include "bhr/conditions.hpp"
#include "bhr/error.hpp"
#include "bhr/search.hpp"
#include "bhr/solver.hpp"

using namespace bhr;

namespace {
EdgeLengthList L(const char* text) { return EdgeLengthList::parse(text); }

bool sound(const Verdict& v, const EdgeLengthList& list) {
  if (v.status != Status::realizable) return true;
  return v.witness && validate(*v.witness, list, v.mode).passed();
}
}  // namespace

TEST_CASE("ones, twos and threes") {
  CHECK(decide_linear_123(0, 2, 2));
  CHECK_FALSE(decide_linear_123(1, 1, 5));
  CHECK(decide_linear_123(2, 0, 0));
  CHECK_FALSE(decide_linear_123(1, 1, 8));
  CHECK(decide_linear_123(1, 1, 6));
  CHECK_THROWS_AS(decide_linear_123(-1, 0, 0), InvalidList);
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; a + b <= 9; ++b)
      for (int c = 0; a + b + c <= 9; ++c) {
        if (a + b + c == 0) continue;
        oracle::Counts counts;
        if (a) counts[1] = a;
        if (b) counts[2] = b;
        if (c) counts[3] = c;
        CHECK_MESSAGE(decide_linear_123(a, b, c) == !oracle::all_realizations(counts, false).empty(),
                      "(" << a << "," << b << "," << c << ")");
      }
}

TEST_CASE("published exceptions") {
  for (auto e : {Exponents{0, 3, 1, 8}, Exponents{1, 0, 3, 1}, Exponents{4, 0, 0, 8}, Exponents{1, 1, 5, 0}}) {
    auto v = decide_linear(e.ones, e.twos, e.threes, e.fives);
    CHECK(v.status == Status::not_realizable);
    REQUIRE(v.reason.has_value());
    CHECK(v.basis == "published");
    auto c = construct_linear(e.ones, e.twos, e.threes, e.fives);
    CHECK(c.status == Status::not_realizable);
    CHECK(c.reason == v.reason);
  }
  CHECK(decide_linear(0, 3, 1, 13).status == Status::not_realizable);
  CHECK(decide_linear(0, 3, 1, 3).status == Status::realizable);
  CHECK(decide_linear(0, 7, 1, 1).status == Status::not_realizable);
  CHECK(decide_linear(0, 9, 1, 1).status == Status::realizable);
  CHECK(decide_linear(0, 10, 1, 1).status == Status::realizable);
}

TEST_CASE("constructions") {
  auto a = construct_linear(0, 0, 6, 7);
  REQUIRE(a.status == Status::realizable);
  CHECK(sound(a, L("3^6,5^7")));
  REQUIRE(a.trace);
  CHECK(a.trace->kind == TraceNode::Kind::catalog);
  CHECK(a.trace->param == 1);

  auto b = construct_linear(0, 2, 3, 3);
  REQUIRE(b.status == Status::realizable);
  CHECK(validate(*b.witness, L("2^2,3^3,5^3"), Mode::linear).passed());

  auto c = construct_linear(1, 0, 3, 1);
  CHECK(c.status == Status::not_realizable);

  auto empty = construct_linear(0, 0, 0, 0);
  REQUIRE(empty.status == Status::realizable);
  CHECK(empty.witness->order() == 1);
  CHECK_THROWS_AS(construct_linear(-1, 0, 0, 0), InvalidList);
}

TEST_CASE("cyclic constructions") {
  auto a = construct_cyclic(L("1,3^3,5^6"));
  REQUIRE(a.status == Status::realizable);
  CHECK(validate(*a.witness, L("1,3^3,5^6"), Mode::cyclic).passed());
  CHECK(a.mode == Mode::cyclic);

  auto b = construct_cyclic(L("5^9"));
  CHECK(b.status == Status::not_realizable);
  CHECK(b.basis == "condition");
  REQUIRE(b.reason);
  CHECK(b.reason->find("d=5") != std::string::npos);

  auto c = construct_cyclic(L("2,3^7,5"));
  REQUIRE(c.status == Status::realizable);
  CHECK(validate(*c.witness, L("2,3^7,5"), Mode::cyclic).passed());

  CHECK(construct_cyclic(L("5")).status == Status::not_realizable);
  CHECK_THROWS_AS(construct_cyclic(L("4")), InvalidList);
}

TEST_CASE("general decisions") {
  auto a = decide_bhr(L("2^3,4^4"));
  CHECK(a.status == Status::not_realizable);
  CHECK(a.basis == "condition");
  auto b = decide_bhr(L("1^6"));
  REQUIRE(b.status == Status::realizable);
  CHECK(b.witness->to_string() == "[0,1,2,3,4,5,6]");
  auto c = decide_bhr(L("2^2,3^4"));
  CHECK(c.status != Status::unknown);
  CHECK(sound(c, L("2^2,3^4")));
  CHECK(c.status == (oracle::any_unnormalized({{2, 2}, {3, 4}}, true) ? Status::realizable : Status::not_realizable));
  auto d = decide_bhr(L("1,2^4,4^2"));
  CHECK(d.mode == Mode::cyclic);
  CHECK_FALSE(d.notes.empty());
  CHECK(sound(d, L("1,2^4,4^2")));
  CHECK(decide_bhr(L("")).status == Status::realizable);
}

TEST_CASE("an exhausted budget is reported as unknown") {
  MemoryCertificateStore store;
  Solver solver(SolverOptions{1, nullptr, &store});
  auto v = solver.decide_bhr(L("1,4^6,6^8"));
  CHECK(v.status == Status::unknown);
  CHECK(v.budget.has_value());
  CHECK(solver.budget() == 1);
}

TEST_CASE("traces replay to the same witness") {
  Solver solver;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 8; ++d) {
          Exponents e{a, b, c, d};
          auto v = solver.construct_linear(e);
          auto list = EdgeLengthList::from_exponents(e);
          CHECK(sound(v, list));
          if (v.status == Status::realizable) {
            REQUIRE(v.trace);
            CHECK(replay(*v.trace) == *v.witness);
            CHECK_FALSE(trace_steps(*v.trace).empty());
          } else {
            CHECK(v.reason.has_value());
          }
          auto cyc = solver.construct_cyclic(list);
          CHECK(sound(cyc, list));
          if (cyc.status == Status::realizable) CHECK(replay(*cyc.trace) == *cyc.witness);
        }
}

TEST_CASE("trace steps") {
  auto t = TraceNode::make_compose("R", TraceNode::make_catalog("P01", 1), TraceNode::make_ones(2));
  auto steps = trace_steps(*t);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0] == "catalog P01 at 1");
  CHECK(steps[1] == "ones 2");
  CHECK(steps[2] == "compose R");
  CHECK(to_string(TraceNode::Kind::bridge) == "bridge");
  auto s = TraceNode::make_search("1,3", Mode::linear, false, 100, 3);
  CHECK_THROWS_AS(replay(*s), Error);
}

TEST_CASE("memo tolerates concurrent callers") {
  Solver solver;
  std::vector<std::vector<std::string>> seen(4);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < 4; ++w)
      pool.emplace_back([&, w] {
        for (int d = 0; d <= 12; ++d) {
          auto v = solver.construct_cyclic(EdgeLengthList::from_exponents({1, 2, 3, d}));
          seen[w].push_back(v.witness ? v.witness->to_string() : std::string(to_string(v.status)));
        }
      });
  }
  for (int w = 1; w < 4; ++w) CHECK(seen[w] == seen[0]);
}

TEST_CASE("status names") {
  CHECK(to_string(Status::not_realizable) == "not-realizable");
  CHECK(to_string(Status::unknown) == "unknown");
}
