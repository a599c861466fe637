#include "qcx/errors.hpp"
#include "qcx/pipeline.hpp"
#include "qcx/reference.hpp"

#include <gtest/gtest.h>

using namespace qcx;
using nlohmann::json;

namespace {

std::string spec_error(const json& j) {
  try {
    parse_spec(CodeSpec::from_json(j));
  } catch (const SpecError& e) {
    return e.code();
  }
  return "ok";
}

bool has(const std::vector<std::string>& xs, const std::string& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

const ReferenceRow& row(const std::string& id) {
  for (const auto& r : reference_rows())
    if (r.id == id) return r;
  throw std::out_of_range(id);
}

}  // namespace

TEST(Spec, Errors) {
  const json ok = {{"q", 2}, {"n", 7}, {"f", "032321"}, {"g", "11"}};
  EXPECT_EQ(spec_error(ok), "ok");
  auto with = [&](const char* key, json v) {
    json j = ok;
    j[key] = std::move(v);
    return j;
  };
  auto without = [&](const char* key) {
    json j = ok;
    j.erase(key);
    return j;
  };
  EXPECT_EQ(spec_error(json::array()), "bad-spec");
  EXPECT_EQ(spec_error(with("schema", 2)), "bad-schema");
  EXPECT_EQ(spec_error(with("q", 4)), "bad-q");
  EXPECT_EQ(spec_error(with("q", "2")), "bad-q");
  EXPECT_EQ(spec_error(with("n", 0)), "bad-n");
  EXPECT_EQ(spec_error(without("g")), "missing-field");
  EXPECT_EQ(spec_error(with("f", 12)), "bad-compact");
  EXPECT_EQ(spec_error(with("f", "0327")), "bad-compact");
  EXPECT_EQ(spec_error(with("f", "1^{9}")), "bad-compact");
  EXPECT_EQ(spec_error(with("mode", "sideways")), "bad-mode");
  EXPECT_EQ(spec_error(with("x1", "123")), "bad-vector");
  EXPECT_EQ(spec_error(with("x1", 5)), "bad-vector");
  EXPECT_EQ(spec_error(with("alpha1", 0)), "bad-alpha");
  EXPECT_EQ(spec_error(with("alpha1", 7)), "bad-alpha");
  EXPECT_EQ(spec_error(with("enum_budget", "12x")), "bad-enum_budget");
  EXPECT_EQ(spec_error(with("f", json::array({0, 3, 2, 3, 2, 1}))), "ok");
}

TEST(Spec, ModeInferenceAndRoundTrip) {
  json j = {{"q", 2}, {"n", 15}, {"f", "12^3"}, {"g", "1220310131"}, {"x1", "(132)^5"}, {"enum_budget", "100000"}};
  const CodeSpec s = CodeSpec::from_json(j);
  EXPECT_EQ(s.mode, SpecMode::ExtendOne);
  EXPECT_EQ(*s.enum_budget, 100000);
  const json back = s.to_json();
  EXPECT_EQ(back["schema"], 1);
  EXPECT_EQ(back["mode"], "extend-one");
  EXPECT_EQ(CodeSpec::from_json(back).to_json(), back);
  j["x2"] = "(132)^5";
  EXPECT_EQ(CodeSpec::from_json(j).mode, SpecMode::ExtendTwo);
  j.erase("x1");
  j.erase("x2");
  EXPECT_EQ(CodeSpec::from_json(j).mode, SpecMode::Base);
}

TEST(Evaluate, Example4Report) {
  const CodeSpec spec = reference_example(4).spec;
  const Report r = evaluate(spec);
  EXPECT_EQ(r.code.to_string(), "[14,6,7]_4");
  ASSERT_TRUE(r.theorem7);
  EXPECT_TRUE(r.theorem7->holds());
  EXPECT_EQ(r.theorem7->char_poly_P->to_string(), "x^7+x^4+x");
  EXPECT_EQ(r.ebits, 8u);
  EXPECT_TRUE(has(r.parameter_strings(), "[[14,6,7;8]]_2"));
  EXPECT_NE(r.to_text().find("[[14,6,7;8]]_2"), std::string::npos);
  EXPECT_NE(r.to_text().find("x^7+x^4+x"), std::string::npos);
  const json j = r.to_json(false);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["theorem7"]["char_poly_P"], "x^7+x^4+x");
  EXPECT_FALSE(j.contains("timing_seconds"));
  EXPECT_EQ(evaluate(spec).to_json(false).dump(), j.dump());
}

TEST(Evaluate, PreconditionAndBudgetErrors) {
  CodeSpec bad = reference_example(4).spec;
  bad.g = "111";
  try {
    evaluate(bad);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.code(), "g-not-divisor");
  }
  EvalOptions tight;
  tight.budget = BigInt(100);
  try {
    evaluate(reference_example(1).spec, tight);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), "16384");
  }
  tight.skip_gated = true;
  const Report r = evaluate(reference_example(1).spec, tight);
  EXPECT_EQ(r.status, "skipped (long-run)");
  EXPECT_TRUE(r.parameter_strings().empty());
  EXPECT_TRUE(r.to_json()["code"]["d"].is_null());
}

TEST(Evaluate, LongRunGate) {
  const CodeSpec ex3 = reference_example(3).spec;
  EXPECT_THROW(evaluate(ex3), BudgetExceeded);
  EvalOptions skip;
  skip.skip_gated = true;
  const Report r = evaluate(ex3, skip);
  EXPECT_TRUE(r.cost.long_run);
  EXPECT_EQ(r.cost.messages, BigInt(1) << 34);
  EXPECT_EQ(r.code.n, 103u);
  EXPECT_EQ(r.code.k, 17u);
  ASSERT_EQ(r.qecc.size(), 2u);
  EXPECT_EQ(r.qecc[0].n, 103u);
  EXPECT_EQ(r.qecc[0].k, 69u);
  EXPECT_EQ(r.qecc[1].n, 104u);
  EXPECT_FALSE(is_desk_scale(reference_example(3)));
  EXPECT_TRUE(is_desk_scale(reference_example(1)));
}

TEST(Evaluate, Example6Bookkeeping) {
  EvalOptions skip;
  skip.skip_gated = true;
  const Report r = evaluate(reference_example(6).spec, skip);
  EXPECT_EQ(r.status, "skipped (long-run)");
  EXPECT_EQ(r.code.n, 22u);
  EXPECT_EQ(r.code.k, 5u);
  ASSERT_EQ(r.eaqecc.size(), 1u);
  EXPECT_EQ(r.eaqecc[0].k, 17u);
  EXPECT_EQ(r.eaqecc[0].c, 5u);
  EXPECT_TRUE(r.eaqecc[0].maximal);
  EXPECT_EQ(r.cost.messages, BigInt(81) * 81 * 81 * 81 * 81);
}

TEST(Evaluate, FindsMissingExtensionVector) {
  CodeSpec s = reference_example(1).spec;
  s.x1.reset();
  EXPECT_THROW(evaluate(s), SpecError);
  EvalOptions o;
  o.find_missing_x = true;
  const Report r = evaluate(s, o);
  ASSERT_TRUE(r.extension);
  ASSERT_FALSE(r.qecc.empty());
  EXPECT_EQ(r.qecc[0].k, 17u);
  EXPECT_EQ(r.qecc[0].d, r.dual.d);
}

TEST(Reference, Lookup) {
  EXPECT_THROW(reference_table(0), SpecError);
  EXPECT_THROW(reference_table(7), SpecError);
  EXPECT_THROW(reference_example(7), SpecError);
  EXPECT_EQ(reference_table(2).size(), reference_table(1).size());
  EXPECT_EQ(reference_example(2).id, "example2");
  for (const auto& r : reference_rows()) EXPECT_NO_THROW(parse_spec(r.spec)) << r.id;
}

TEST(Reference, ExamplesReproduce) {
  for (int id : {1, 2, 4, 5}) {
    const auto& ref = reference_example(id);
    const RowCheck c = check_row(ref);
    EXPECT_EQ(c.status, "reproduced") << ref.id << " " << c.detail;
    ASSERT_TRUE(c.report && c.report->enumerator);
    const std::size_t N = c.report->code.n;
    if (!ref.printed_enumerator.empty())
      EXPECT_EQ(*c.report->enumerator, WeightEnumerator::parse(ref.printed_enumerator, N)) << ref.id;
    if (!ref.printed_dual_enumerator.empty())
      EXPECT_EQ(*c.report->dual_enumerator, WeightEnumerator::parse(ref.printed_dual_enumerator, N)) << ref.id;
  }
}

TEST(Reference, MalformedRows) {
  for (const char* id : {"table3-n35", "table3-n65", "table5-n21"}) {
    const RowCheck c = check_row(row(id));
    EXPECT_EQ(c.status, "malformed") << id;
    EXPECT_TRUE(c.ok());
  }
}

// the row (x1, 0, 1) is itself a codeword, so d(C') <= wt(x1) + 1
TEST(Reference, ExtensionRowBoundsDistance) {
  for (const char* id : {"table1-n17", "table1-n23", "table3-n41"}) {
    const ReferenceRow& ref = row(id);
    const ParsedSpec ps = parse_spec(ref.spec);
    std::size_t w = 1;
    for (Elem e : *ps.x1) w += !e.is_zero();
    const RowCheck c = check_row(ref);
    ASSERT_TRUE(c.report && c.report->distances_known) << id;
    EXPECT_EQ(c.report->code.d, w) << id;
    // dual and quantum parameters are unaffected
    EXPECT_TRUE(std::none_of(c.missing.begin(), c.missing.end(), [](const std::string& s) { return s.rfind("[[", 0) == 0; }))
        << id;
  }
  EXPECT_EQ(check_row(row("table1-n17")).missing, std::vector<std::string>{"[35,9,14]_4"});
}
