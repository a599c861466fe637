#include "qcx/reference.hpp"

#include "qcx/errors.hpp"

#include <algorithm>
#include <chrono>

namespace qcx {

namespace {

using nlohmann::json;

CodeSpec make_spec(std::string name, unsigned q, std::size_t n, json f, json g, SpecMode mode,
                   std::optional<json> x1 = std::nullopt, std::optional<json> x2 = std::nullopt) {
  CodeSpec s;
  s.name = std::move(name);
  s.q = q;
  s.n = n;
  s.f = std::move(f);
  s.g = std::move(g);
  s.mode = mode;
  s.x1 = std::move(x1);
  s.x2 = std::move(x2);
  return s;
}

json zeta(std::initializer_list<int> logs) {
  json a = json::array();
  for (int k : logs) a.push_back(k < 0 ? json("0") : json("z^" + std::to_string(k)));
  return a;
}

// Tables 1/2 and 3/4 share rows: inputs from the odd table, the dual and
// quantum parameters from the even one.
ReferenceRow extended_row(int table, unsigned q, std::size_t n, const char* f, const char* g, const char* x1,
                          std::vector<std::string> printed, const char* suffix = "") {
  const std::string id = "table" + std::to_string(table) + "-n" + std::to_string(n) + suffix;
  return {id, {table, table + 1}, make_spec(id, q, n, f, g, SpecMode::ExtendOne, json(x1)), std::move(printed), "", "", {}};
}

ReferenceRow base_row(int table, std::size_t n, const char* f, const char* g, std::string printed) {
  const std::string id = "table" + std::to_string(table) + "-n" + std::to_string(n);
  return {id, {table}, make_spec(id, 2, n, f, g, SpecMode::Base), {std::move(printed)}, "", "", {}};
}

std::vector<ReferenceRow> build_rows() {
  std::vector<ReferenceRow> rows;

  rows.push_back({"example1", {}, make_spec("example1", 2, 15, "12^3", "1220310131", SpecMode::ExtendOne, json("(132)^5")),
                  {"[31,7,16]_4", "[31,24,5]_4", "[[31,17,5]]_2", "[[32,17,5]]_2"},
                  "0^1 16^3 18^{630}20^{2520}22^{3900}24^{5400}26^{3150}28^{780}",
                  "0^15^{2709}6^{33789}7^{352635}8^{3146895}9^{24208470}10^{159955686}11^{915334434}"
                  "12^{4577489490}13^{20070644055}14^{77414126895}15^{263209977249}16^{789626267391}"
                  "17^{2090205270180}18^{4877070505860}19^{10011021610380}20^{18019505816172}"
                  "21^{28316806886643}22^{38613305033355}23^{45329278307085}24^{45328597815825}"
                  "25^{38076647339430}26^{26360313433398}27^{14644850099250}28^{6276277886370}"
                  "29^{1947832175745}30^{389563102377}31^{37699888887}",
                  {}});
  rows.push_back({"example2", {},
                  make_spec("example2", 3, 10, "1521", "5310571", SpecMode::ExtendTwo, json("1182122601"),
                            json("1738577032")),
                  {"[22,6,10]_9", "[22,16,5]_9", "[[22,10,5]]_3"},
                  "0^1 10^{16} 12^8 13^{80}14^{624}15^{3376}16^{11192}17^{32856}18^{71520}19^{118336}"
                  "20^{142128}21^{112664}22^{38640}",
                  "",
                  {}});
  rows.push_back({"example3", {},
                  make_spec("example3", 2, 51, "1^{10}21^42", "222102000311220302302021212000303321",
                            SpecMode::ExtendOne, json("120003202330231302232303132122302133102030122013300")),
                  {"[103,17,38]_4", "[[103,69,7]]_2"},
                  "0^1 38^3 48^6 50^{96}52^{1971}54^{14862}56^{92127}58^{551322}60^{2784441}62^{11959407}"
                  "64^{43955487}66^{136538139}68^{359079711}70^{796085910}72^{1480101177}74^{2293531833}"
                  "76^{2941096230}78^{3093630249}80^{2642685339}82^{1811850639}84^{982791951}86^{413828565}"
                  "88^{132236040}90^{31182537}92^{5228613}94^{597612}96^{43263}98^{1626}100^{27}",
                  "",
                  {}});
  rows.push_back({"example4", {}, make_spec("example4", 2, 7, "032321", "11", SpecMode::Base),
                  {"[14,6,7]_4", "[[14,6,7;8]]_2"}, "", "", {}});
  rows.push_back({"example5", {}, make_spec("example5", 2, 11, "01321", "1220331", SpecMode::Base),
                  {"[22,5,13]_4", "[22,17,4]_4", "[[22,17,4;5]]_2"},
                  "0^1 13^{66}14^{66}15^{198}16^{264}17^{99}18^{132}19^{132}20^{33}21^{33}",
                  "0^14^{627}5^{6567}6^{52437}7^{364056}8^{2050290}9^{9562740}10^{37269804}11^{122099016}"
                  "12^{335494302}13^{774526170}14^{1493685534}15^{2389566696}16^{3136710621}17^{3321093204}"
                  "18^{2767437420}19^{1748036664}20^{786523551}21^{224745015}22^{30644469}",
                  {}});
  rows.push_back({"example6", {},
                  make_spec("example6", 9, 10, zeta({0, 2, 14}), zeta({48, 44, 10, 36, 52, 58, 44, 0}),
                            SpecMode::ExtendTwo, zeta({44, 71, 56, 22, 52, 73, 33, 58, 58, 33}),
                            zeta({18, 41, 40, 10, 17, 31, 71, 61, 66, 75})),
                  {"[[22,17,5;5]]_9"}, "", "", {}});

  // Tables 1 and 2
  rows.push_back(extended_row(1, 2, 7, "12", "101^3", "(13)^23^21", {"[15,4,8]_4", "[15,11,3]_4", "[[15,7,3]]_2"}));
  rows.push_back(extended_row(1, 2, 17, "3^31", "132^20^22^231", "13^210^42^230(21)^20",
                              {"[35,9,14]_4", "[35,26,5]_4", "[[35,17,5]]_2"}));
  rows.push_back(extended_row(1, 2, 23, "1^623", "10(100)^21^5", "10232^20^3313020^232^20^33",
                              {"[47,12,20]_4", "[47,35,6]_4", "[[47,23,6]]_2"}));
  rows.push_back(extended_row(1, 2, 29, "1^9212", "12(331)^2(133)^221", "1021^30^4103^2203^201^2(21)^2131^2",
                              {"[59,15,24]_4", "[59,44,7]_4", "[[59,29,7]]_2"}));
  rows.push_back(extended_row(1, 2, 31, "1^73", "1^701^2(01)^210^2101^3", "10^2132301^2013101^223^2030201^2313^2",
                              {"[63,11,24]_4", "[63,52,5]_4", "[[63,41,5]]_2"}, "-k11"));
  rows.push_back(extended_row(1, 2, 31, "1^{12}212", "10^31^40^410^21^2", "(10)^2020^213^20^213031^20212012^21321",
                              {"[63,16,22]_4", "[63,47,7]_4", "[[63,31,7]]_2"}, "-k16"));
  rows.push_back(extended_row(1, 2, 37, "1^{14}2013", "12^2020132^4310202^21",
                              "(10^2)^23^22^3310^21^22^21310^23230102120102",
                              {"[75,19,26]_4", "[75,56,8]_4", "[[75,37,8]]_2"}));
  rows.push_back(extended_row(1, 2, 39, "1^{14}3203", "121^3302^312^21302^213^21",
                              "1^203^32^43230312313(23)^203(20)^23^21210^33",
                              {"[79,19,32]_4", "[79,60,8]_4", "[[79,41,8]]_2"}));
  rows.push_back(extended_row(1, 2, 41, "1^72^21", "131210(31)^21012^23^22^2101^2313012131",
                              "130^3232012^212012^23^220(3101)^221203^203020",
                              {"[83,11,30]_4", "[83,72,5]_4", "[[83,61,5]]_2"}));
  rows.push_back(extended_row(1, 2, 55, "1^{10}2", "130132^230203^22131(0^22)^23^310^210210(31)^232^301",
                              "(13)^221^30^21302^332102^21^2202(30)^32^43^203^2210^320232^203",
                              {"[111,13,46]_4", "[111,98,5]_4", "[[111,85,5]]_2"}));
  rows.push_back(extended_row(1, 2, 63, "1^{12}212", "31231^232030^33^2012^31213^202302^23213(10)^231^20^21^2210121",
                              "1^20232^3321310^22131210^2201^3030121^42^412^401(32)^2013^201^202^3",
                              {"[127,13,52]_4", "[127,114,5]_4", "[[127,101,5]]_2"}, "-k13"));
  rows.push_back(extended_row(1, 2, 63, "1^{12}212", "31^532^30^2231^23203^21^330^42^212^201203123^21^23231",
                              "10^2303(20)^2121^32^3121^202^31^23123(12)^323213231323^202^3(30)^212310",
                              {"[127,16,50]_4", "[127,111,6]_4", "[[127,95,6]]_2"}, "-k16"));

  // Tables 3 and 4
  rows.push_back(extended_row(3, 3, 11, "12486", "15^3101", "126245487^3", {"[23,6,12]_9", "[23,17,5]_9", "[[23,11,5]]_3"}));
  rows.push_back(extended_row(3, 3, 17, "1^45121", "5215371561", "1^23680^21726823472",
                              {"[35,9,16]_9", "[35,26,6]_9", "[[35,17,6]]_3"}));
  rows.push_back(extended_row(3, 3, 23, "1^8212", "150(51)^2(10)^201", "18452373054381^26383157^2",
                              {"[47,12,23]_9", "[47,35,7]_9", "[[47,23,7]]_3"}));
  rows.push_back(extended_row(3, 3, 35, "1^621", "5208270^2(75)^2540276513148^2731",
                              "1050^22676308^2316^202384^20^373487^280^2", {"[71,9,26]_9", "[71,62,5]_9", "[[71,53,5]]_3"}));
  rows.back().malformed = "printed x1 is not in the Hermitian dual of the first block";
  rows.push_back(extended_row(3, 3, 41, "1^206", "583540135073452^26126526^218730175081741",
                              "1743516718^230141^2786273^281(28)^2245^28631^242",
                              {"[83,5,39]_9", "[83,78,4]_9", "[[83,73,4]]_3"}));
  rows.push_back(extended_row(3, 3, 65, "1^921", "173681^2057206^22847641684587643^2746825^280^21340275868531",
                              "17361^28^225412708058626127^2805(26)^212^27080(08)^2128642857381682^264214",
                              {"[131,12,59]_9", "[131,119,6]_9", "[[131,107,6]]_3"}));
  rows.back().malformed = "printed g does not divide x^65 - 1";

  // Table 5: first code of the maximal-entanglement pair
  rows.push_back(base_row(5, 15, "320213", "1^30^21^3", "[[30,8,15;22]]_2"));
  rows.push_back(base_row(5, 17, "1213^201", "1(10)^2(01)^21", "[[34,8,18;26]]_2"));
  rows.push_back(base_row(5, 21, "1^623201^2", "1320^4321", "[[42,10,17;32]]_2"));
  rows.back().malformed = "printed g has degree 9 but the printed k and c need degree 11";
  rows.push_back(base_row(5, 31, "1^60201", "10^31^3010^4101^30^31", "[[62,10,32;52]]_2"));
  rows.push_back(base_row(5, 35, "1^523^31", "12031301203^22^20310212031", "[[70,12,37;58]]_2"));
  rows.push_back(base_row(5, 41, "1^9232", "1^30^4(10)^2(01)^20^41^3", "[[82,20,33;62]]_2"));
  // Table 6: second code of the pair
  rows.push_back(base_row(6, 17, "31^22^2", "1(10)^2(01)^21", "[[34,26,5;8]]_2"));
  rows.push_back(base_row(6, 19, "1^52031", "132^20103^221", "[[38,29,5;9]]_2"));
  rows.push_back(base_row(6, 31, "1^721", "10^31^3010^4101^30^31", "[[62,52,5;10]]_2"));
  return rows;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = build_rows();
  return rows;
}

std::vector<ReferenceRow> reference_table(int id) {
  if (id < 1 || id > 6) throw SpecError("bad-table", "table id must be 1..6");
  std::vector<ReferenceRow> out;
  for (const auto& r : reference_rows())
    if (std::find(r.tables.begin(), r.tables.end(), id) != r.tables.end()) out.push_back(r);
  return out;
}

const ReferenceRow& reference_example(int id) {
  if (id < 1 || id > 6) throw SpecError("bad-example", "example id must be 1..6");
  const std::string want = "example" + std::to_string(id);
  for (const auto& r : reference_rows())
    if (r.id == want) return r;
  throw std::logic_error("reference example missing");
}

bool is_desk_scale(const ReferenceRow& row) {
  // dimension of the enumerated code, read off the spec without building it
  const ParsedSpec ps = parse_spec(row.spec);
  const int deg = ps.g.degree();
  if (deg < 0) return true;
  const std::size_t cols = row.spec.mode == SpecMode::ExtendOne ? 1 : row.spec.mode == SpecMode::ExtendTwo ? 2 : 0;
  const std::size_t k = row.spec.n - std::min<std::size_t>(row.spec.n, static_cast<std::size_t>(deg)) + cols;
  const Cost c = enumeration_cost(ps.field->order(), k, 2 * row.spec.n + cols);
  return !c.long_run && c.messages <= (BigInt(1) << 32);
}

RowCheck check_row(const ReferenceRow& row, const EvalOptions& opts) {
  RowCheck out;
  out.id = row.id;
  const auto start = std::chrono::steady_clock::now();
  try {
    EvalOptions o = opts;
    o.skip_gated = true;
    Report rep = evaluate(row.spec, o);
    if (rep.status != "ok") {
      out.status = rep.status;
      out.detail = rep.cost.messages.str() + " messages";
    } else {
      const auto derived = rep.parameter_strings();
      for (const auto& p : row.printed)
        if (std::find(derived.begin(), derived.end(), p) == derived.end()) out.missing.push_back(p);
      out.status = out.missing.empty() ? "reproduced" : row.malformed ? "malformed" : "mismatch";
      if (!out.missing.empty()) {
        for (const auto& d : derived) out.detail += (out.detail.empty() ? "derived " : ", ") + d;
        if (row.malformed) out.detail = *row.malformed + " (" + out.detail + ")";
      }
    }
    out.report = std::move(rep);
  } catch (const Error& e) {
    out.status = row.malformed ? "malformed" : "error";
    out.detail = e.code() + ": " + e.what();
    if (row.malformed) out.detail = *row.malformed + " (" + out.detail + ")";
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace qcx
