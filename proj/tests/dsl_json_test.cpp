#include <gtest/gtest.h>

#include "slimlat/dsl.hpp"
#include "slimlat/error.hpp"
#include "slimlat/json_io.hpp"
#include "slimlat/lamps.hpp"
#include "slimlat/reducer.hpp"
#include "support.hpp"

using namespace slimlat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

std::string parse_message(std::string_view text) {
  try {
    parse_dsl(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Dsl, ParsesCommentsAndBlankLines) {
  const auto seq = parse_dsl("# S_7\n\ngrid 1 1   # base\n  fork 0 0 1\n");
  EXPECT_EQ(seq.p, 1);
  EXPECT_EQ(seq.q, 1);
  ASSERT_EQ(seq.steps.size(), 1u);
  EXPECT_EQ(seq.steps[0].k, 1);
}

TEST(Dsl, CanonicalEmission) {
  const auto seq = parse_dsl("grid  2 2\nfork 1 1   2");
  EXPECT_EQ(emit_dsl(seq), "grid 2 2\nfork 1 1 2\n");
  EXPECT_EQ(inline_dsl(seq), "grid 2 2; fork 1 1 2");
  EXPECT_EQ(parse_dsl(emit_dsl(seq)), seq);
}

TEST(Dsl, ErrorsCarryPosition) {
  EXPECT_EQ(parse_message("grid 1 1\nfork 0 x 1\n").rfind("line 2, column 8", 0), 0u)
      << parse_message("grid 1 1\nfork 0 x 1\n");
  EXPECT_NE(parse_message("fork 0 0 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_message("grid 1 1\ngrid 1 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_message("grid 1 1\nfork 0 0 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(parse_message("grid 1 1\nspoon 0 0 1\n").find("line 2, column 1"), std::string::npos);
  EXPECT_NE(parse_message("grid 1 1 1\n").find("line 1"), std::string::npos);
  EXPECT_FALSE(parse_message("").empty());
  EXPECT_EQ(kind_of([] { parse_dsl("grid 0 1"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_dsl("grid 1 -1"); }), ErrorKind::parse);
}

TEST(Json, PosetRoundTrip) {
  const Poset p = Poset::from_covers(4, {{2, 3}, {0, 1}, {0, 2}});
  const std::string text = poset_to_json(p);
  EXPECT_EQ(text, "{\"n\":4,\"covers\":[[0,1],[0,2],[2,3]]}\n");
  EXPECT_EQ(poset_from_json(text), p);
}

TEST(Json, SequenceRoundTrip) {
  const auto seq = fixtures::seq(fixtures::kSandwich);
  const std::string text = sequence_to_json(seq);
  EXPECT_EQ(text, "{\"grid\":[1,1],\"steps\":[[0,0,3],[0,2,1]]}\n");
  EXPECT_EQ(sequence_from_json(text), seq);
}

TEST(Json, ParseErrors) {
  EXPECT_EQ(kind_of([] { poset_from_json("{\"n\": 2"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { poset_from_json("{\"covers\": []}"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { poset_from_json("{\"n\": 2, \"covers\": [[0]]}"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { sequence_from_json("{\"grid\": [1], \"steps\": []}"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { sequence_from_json("{\"grid\": [1, 1], \"steps\": [[0, 0, 0]]}"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { diagram_from_json("[]"); }), ErrorKind::parse);
}

TEST(Json, DiagramWithoutOrdersIsDerived) {
  const auto d = fixtures::built(fixtures::kS7).diagram();
  const PlanarDiagram back = diagram_from_json(poset_to_json(d.poset()));
  EXPECT_TRUE(is_slim_rectangular(back));
  EXPECT_EQ(canonical_code(back), canonical_code(d));
}

TEST(Json, Reports) {
  const auto pl = fixtures::built(fixtures::kS7);
  const std::string lamps = lamp_report_json(pl);
  EXPECT_NE(lamps.find("\"kind\":\"internal\""), std::string::npos);
  EXPECT_NE(lamps.find("\"con_iso\":{\"ok\":true"), std::string::npos);
  const std::string con = congruence_report_json(congruence_lattice(pl.lattice()));
  EXPECT_NE(con.find("\"size\":5"), std::string::npos);
  const std::string bounds = bound_report_json(check_bounds(pl, false));
  EXPECT_NE(bounds.find("\"length\":3"), std::string::npos);
  const auto m = minimize(fixtures::built(fixtures::kWideFork));
  const std::string trace = reduction_trace_json(fixtures::seq(fixtures::kWideFork), m.result.sequence(), m.trace);
  EXPECT_NE(trace.find("\"rule\":\"neighboring\""), std::string::npos);
}
