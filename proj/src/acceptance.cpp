#include "starq/acceptance.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "starq/classify.hpp"
#include "starq/decomp.hpp"
#include "starq/emit.hpp"
#include "starq/fock.hpp"
#include "starq/orbits.hpp"

namespace starq::acceptance {

namespace {

Weight W(const char* s) { return parse_weight(s); }

std::string join(const std::vector<std::string>& xs, const char* sep = "; ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

// ---- 1: q(3) orbit taxonomy ----

// A vertex named in a diagram: word * lambda, or word * (lambda + alpha_1).
struct Name {
  const char* word;
  bool shifted = false;
};

struct NamedEdge {
  Name upper;
  int label;
  Name lower;
};

struct OrbitCase {
  const char* lambda;
  std::vector<Name> names;           // the diagram's vertex labels
  std::vector<NamedEdge> edges;      // including loops from the diagram's equalities
  std::vector<const char*> numeric;  // hand-computed vertex coordinates
  size_t maxima;
};

const std::vector<OrbitCase>& orbit_cases() {
  static const std::vector<OrbitCase> cases = {
      {"(-1/2,1/2,1/2)",
       {{"e"}},
       {{{"e"}, 1, {"e"}}, {{"e"}, 2, {"e"}}},
       {"(-1/2,1/2,1/2)"},
       1},
      {"(3,2,1)",
       {{"e"}, {"s1"}, {"s2"}, {"s2 s1"}, {"s1 s2"}, {"s2 s1 s2"}},
       {{{"e"}, 1, {"s1"}},
        {{"e"}, 2, {"s2"}},
        {{"s1"}, 2, {"s2 s1"}},
        {{"s2"}, 1, {"s1 s2"}},
        {{"s2 s1"}, 1, {"s1 s2 s1"}},
        {{"s1 s2"}, 2, {"s2 s1 s2"}}},
       {"(3,2,1)", "(2,3,1)", "(3,1,2)", "(2,1,3)", "(1,3,2)", "(1,2,3)"},
       1},
      {"(1/2,-1/2,-3/2)",
       {{"e"}, {"e", true}, {"s1"}, {"s2"}, {"s1", true}, {"s2 s1"}, {"s1 s2"}, {"s2 s1", true}, {"s2 s1 s2"}},
       {{{"e"}, 1, {"s1"}},
        {{"e"}, 2, {"s2"}},
        {{"e", true}, 2, {"e", true}},
        {{"e", true}, 1, {"s1", true}},
        {{"s1"}, 2, {"s2 s1"}},
        {{"s2"}, 1, {"s1 s2"}},
        {{"s1", true}, 2, {"s2 s1", true}},
        {{"s2 s1"}, 1, {"s1 s2 s1"}},
        {{"s1 s2"}, 2, {"s2 s1 s2"}},
        {{"s2 s1 s2"}, 1, {"s1 s2 s1 s2"}}},
       {"(1/2,-1/2,-3/2)", "(3/2,-3/2,-3/2)", "(-3/2,3/2,-3/2)", "(1/2,-3/2,-1/2)", "(-5/2,5/2,-3/2)",
        "(-3/2,-5/2,5/2)", "(-3/2,1/2,-1/2)", "(-5/2,-3/2,5/2)", "(-3/2,-3/2,3/2)"},
       2},
      {"(0,0,0)",
       {{"e"}, {"s1"}, {"s2"}, {"s2 s1"}},
       {{{"e"}, 1, {"s1"}}, {{"e"}, 2, {"s2"}}, {{"s1"}, 2, {"s2 s1"}}, {{"s2"}, 1, {"s1 s2"}}},
       {"(0,0,0)", "(-1,1,0)", "(0,-1,1)", "(-1,0,1)"},
       1},
      {"(-1/2,1/2,-1/2)",
       {{"e", true}, {"e"}, {"s1", true}, {"s2"}, {"s2 s1", true}},
       {{{"e", true}, 2, {"e", true}},
        {{"e"}, 1, {"e"}},
        {{"e", true}, 1, {"s1", true}},
        {{"e"}, 2, {"s2"}},
        {{"s1", true}, 2, {"s2 s1", true}},
        {{"s2"}, 1, {"s1 s2"}}},
       {"(-1/2,1/2,-1/2)", "(1/2,-1/2,-1/2)", "(-3/2,3/2,-1/2)", "(-1/2,-3/2,3/2)", "(-3/2,-1/2,3/2)"},
       2},
      {"(1,1,0)",
       {{"e"}, {"s2"}, {"s1 s2"}},
       {{{"e"}, 1, {"e"}}, {{"e"}, 2, {"s2"}}, {{"s2"}, 1, {"s1 s2"}}, {{"s1 s2"}, 2, {"s2 s1 s2"}}},
       {"(1,1,0)", "(1,0,1)", "(0,1,1)"},
       1},
  };
  return cases;
}

bool c1_orbits(std::string& detail) {
  std::vector<std::string> notes;
  bool ok = true;
  for (const auto& c : orbit_cases()) {
    const Weight l = W(c.lambda);
    auto eval = [&](const Name& nm) {
      return star(parse_word(nm.word), nm.shifted ? l + simple_root(3, 1) : l);
    };
    OrbitGraph g = orbit(l, 10000);
    std::set<Weight> named, numeric, computed(g.vertices.begin(), g.vertices.end());
    for (const auto& nm : c.names) named.insert(eval(nm));
    for (const char* s : c.numeric) numeric.insert(W(s));
    using E = std::tuple<Weight, int, Weight, Order>;
    std::set<E> want, got;
    for (const auto& e : c.edges) {
      Weight u = eval(e.upper), d = eval(e.lower);
      want.emplace(u, e.label, d, u == d ? Order::Equal : Order::Greater);
    }
    for (const auto& e : g.edges) got.emplace(e.from, e.label, e.to, e.relation);
    bool case_ok = !g.truncated && named == numeric && numeric == computed && named.size() == c.names.size() &&
                   want == got && g.maximal().size() == c.maxima;
    ok = ok && case_ok;
    notes.push_back(std::string(c.lambda) + ": " + std::to_string(g.vertices.size()) + " vertices, " +
                    std::to_string(g.edges.size()) + " edges, " + std::to_string(g.maximal().size()) + " maximal" +
                    (case_ok ? "" : " MISMATCH"));
  }
  detail = join(notes);
  return ok;
}

// ---- 2: the n=7 table ----

const char* const kLambda7 = "(1,0,0,0,0,-1,-2)";

const std::vector<std::vector<const char*>>& table_n7() {
  static const std::vector<std::vector<const char*>> rows = {
      {"s1", "s1 s2", "s1 s2 s3 s4 s5", "s1 s2 s3 s4 s5 s6"},
      {"s2", "s2 s1", "s2 s3 s4 s5", "s2 s3 s4 s5 s6"},
      {"s3", "s3 s2 s1", "s3 s4 s5", "s3 s4 s5 s6"},
      {"s4", "s4 s3 s2 s1", "s4 s5", "s4 s5 s6"},
      {"s5", "s5 s4", "s5 s4 s3 s2 s1", "s5 s6"},
      {"s6", "s6 s5 s4 s3 s2 s1", "s6 s5", "s6 s5 s4"},
  };
  return rows;
}

using Tagged = std::tuple<int, Weight, Word>;  // type (0 for lambda), weight, word

bool c2_table(std::string& detail) {
  const Weight l = W(kLambda7);
  std::set<Tagged> want{{0, l, Word{}}};
  for (size_t k = 0; k < table_n7().size(); ++k)
    for (const char* w : table_n7()[k]) want.emplace(static_cast<int>(k + 1), star(parse_word(w), l), parse_word(w));
  std::set<Tagged> got;
  auto entries = enumerate_bounded(l);
  for (const auto& e : entries) got.emplace(e.type ? e.type->k : 0, e.weight, e.word);
  ZF zf = z_f(l);
  detail = std::to_string(entries.size()) + " weights (expected 25), z=" + std::to_string(zf.z) +
           ", f=" + std::to_string(zf.f);
  return entries.size() == 25 && want.size() == 25 && want == got && zf.z == 4 && zf.f == 2;
}

// ---- 3: family table ----

struct FamilyRow {
  std::vector<int> regularities;
  std::vector<const char*> words;
};

bool c3_families(std::string& detail) {
  static const std::vector<FamilyRow> table = {
      {{1}, {"s1", "s2 s1", "s3 s2 s1", "s4 s3 s2 s1", "s5 s4 s3 s2 s1", "s6 s5 s4 s3 s2 s1"}},
      {{2, 3, 4}, {"s2", "s1 s2", "s3", "s4", "s5 s4", "s6 s5 s4"}},
      {{5}, {"s5", "s4 s5", "s3 s4 s5", "s2 s3 s4 s5", "s1 s2 s3 s4 s5", "s6 s5"}},
      {{6}, {"s6", "s5 s6", "s4 s5 s6", "s3 s4 s5 s6", "s2 s3 s4 s5 s6", "s1 s2 s3 s4 s5 s6"}},
  };
  // Arrow graph of the regularity {2,3,4} family.
  static const std::vector<std::tuple<const char*, int, const char*>> graph = {
      {"s2", 1, "s1 s2"}, {"s2", 3, "s3"}, {"s3", 2, "s2"},       {"s3", 4, "s4"},
      {"s4", 3, "s3"},    {"s4", 5, "s5 s4"}, {"s5 s4", 6, "s6 s5 s4"},
  };
  const Weight l = W(kLambda7);
  auto fams = families(l);
  std::map<std::vector<int>, std::set<std::pair<int, Weight>>> got;
  std::set<std::tuple<Weight, int, Weight>> got_graph;
  for (const auto& f : fams) {
    auto& s = got[f.regularities];
    for (const auto& m : f.members) s.emplace(m.type ? m.type->k : 0, m.weight);
    if (f.regularities == std::vector<int>{2, 3, 4})
      for (const auto& a : f.arrows)
        if (!a.entry) got_graph.emplace(a.from, a.label, a.to);
  }
  std::map<std::vector<int>, std::set<std::pair<int, Weight>>> want;
  for (const auto& row : table) {
    auto& s = want[row.regularities];
    for (const char* w : row.words) s.emplace(parse_word(w).front(), star(parse_word(w), l));
  }
  std::set<std::tuple<Weight, int, Weight>> want_graph;
  for (const auto& [a, i, b] : graph) want_graph.emplace(star(parse_word(a), l), i, star(parse_word(b), l));
  detail = std::to_string(fams.size()) + " families; merged-family arrows " + std::to_string(got_graph.size()) +
           " (expected " + std::to_string(want_graph.size()) + ")";
  return fams.size() == 4 && got == want && got_graph == want_graph;
}

// ---- 4: counting formulas ----

enum class AnchorClass { RegularSmallZ, RegularLargeZ, Singular };

std::vector<Weight> sample_anchors(int n, AnchorClass cls, size_t want, std::mt19937& rng, size_t& distinct) {
  std::uniform_int_distribution<int> coord(-5, 5), pick(0, 5), half(-5, 4);
  std::set<Weight> found;
  for (int attempt = 0; attempt < 200000 && found.size() < want; ++attempt) {
    bool halves = pick(rng) == 0;
    std::vector<Scalar> c;
    for (int i = 0; i < n; ++i) {
      if (halves) {
        c.push_back(Scalar(Rational(2 * half(rng) + 1, 2)));
      } else {
        int r = pick(rng);
        c.push_back(cls == AnchorClass::RegularLargeZ && r < 4 ? Scalar(0) : Scalar(coord(rng)));
      }
    }
    Weight l(std::move(c));
    MaximalInfo mi = maximal_info(l);
    if (!mi.is_maximal || mi.stabilizer.size() > 1) continue;
    AnchorClass got = !mi.stabilizer.empty() ? AnchorClass::Singular
                      : z_f(l).z <= 2        ? AnchorClass::RegularSmallZ
                                             : AnchorClass::RegularLargeZ;
    if (got == cls) found.insert(l);
  }
  distinct = found.size();
  std::vector<Weight> out(found.begin(), found.end());
  // Small classes (n=3, z>=3 holds only lambda=0) are sampled with repetition.
  for (size_t i = 0; !found.empty() && out.size() < want; ++i) out.push_back(out[i]);
  return out;
}

bool c4_counting(std::string& detail) {
  std::mt19937 rng(20240601u);
  std::vector<std::string> notes;
  bool ok = true;
  for (int n = 3; n <= 6; ++n) {
    for (AnchorClass cls : {AnchorClass::RegularSmallZ, AnchorClass::RegularLargeZ, AnchorClass::Singular}) {
      size_t distinct = 0;
      auto anchors = sample_anchors(n, cls, 20, rng, distinct);
      bool cls_ok = anchors.size() >= 20;
      for (const auto& l : anchors) {
        auto entries = enumerate_bounded(l);
        int z = z_f(l).z;
        size_t total = 0, per_type = 0;
        switch (cls) {
          case AnchorClass::RegularSmallZ: total = (n - 1) * (n - 1) + 1; per_type = n - 1; break;
          case AnchorClass::RegularLargeZ: total = (n - 1) * (n - z + 1) + 1; per_type = n - z + 1; break;
          case AnchorClass::Singular: total = n - 1; per_type = 1; break;
        }
        std::map<int, size_t> counts;
        std::set<Weight> seen;
        for (const auto& e : entries) {
          seen.insert(e.weight);
          if (!e.type) continue;
          counts[e.type->k]++;
          Verdict v = classify(e.weight);
          if (!(v.kind == Verdict::Kind::BoundedInfinite && v.type == e.type)) cls_ok = false;
        }
        if (entries.size() != total || seen.size() != total || counts.size() != static_cast<size_t>(n - 1)) cls_ok = false;
        for (const auto& [k, m] : counts)
          if (m != per_type) cls_ok = false;
      }
      ok = ok && cls_ok;
      const char* name = cls == AnchorClass::RegularSmallZ   ? "z<=2"
                         : cls == AnchorClass::RegularLargeZ ? "z>=3"
                                                             : "singular";
      notes.push_back("n=" + std::to_string(n) + " " + name + ": " + std::to_string(anchors.size()) + " samples (" +
                      std::to_string(distinct) + " distinct)" + (cls_ok ? "" : " FAIL"));
    }
  }
  detail = join(notes);
  return ok;
}

// ---- 5: string-length bound ----

bool c5_strings(std::string& detail) {
  size_t weights = 0, len4 = 0, longest = 0;
  bool ok = true;
  auto visit = [&](const Weight& mu) {
    ++weights;
    for (const auto& s : increasing_strings(mu)) {
      // Length counts the weights of the string.
      const size_t len = s.weights.size();
      longest = std::max(longest, len);
      if (len > 4) ok = false;
      if (len == 4) {
        ++len4;
        if (!maximal_info(s.top()).stabilizer.empty()) ok = false;
      }
    }
  };
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) visit(Weight({Scalar(a), Scalar(b), Scalar(c)}));
  auto h = [](int k) { return Scalar(Rational(2 * k + 1, 2)); };
  for (int a = -4; a <= 3; ++a)
    for (int b = -4; b <= 3; ++b)
      for (int c = -4; c <= 3; ++c) visit(Weight({h(a), h(b), h(c)}));
  detail = std::to_string(weights) + " weights, longest string " + std::to_string(longest) + ", " +
           std::to_string(len4) + " strings of length 4";
  return ok && len4 > 0;
}

// ---- 6: verdicts ----

bool c6_verdicts(std::string& detail) {
  struct Case {
    const char* w;
    bool bounded;
  };
  static const std::vector<Case> cases = {{"(1,-1,1,-1)", true}, {"(c,-c,c)", true}, {"(c,-c,c-1)", false}};
  std::vector<std::string> notes;
  bool ok = true;
  for (const auto& c : cases) {
    Verdict v = classify(W(c.w));
    bool pass = v.bounded() == c.bounded;
    ok = ok && pass;
    std::string got = verdict_name(v.kind);
    notes.push_back(std::string(c.w) + " -> " + got + (pass ? "" : std::string(" (expected ") + (c.bounded ? "bounded" : "unbounded") + ")"));
  }
  detail = join(notes);
  return ok;
}

// ---- 7: JH tables for n = 4 ----

// Cell: word_dot . (word_star * lambda).
struct Cell {
  const char* dot;
  const char* star;
};

struct JHRow {
  int k;
  std::vector<Cell> cells;
  std::vector<const char*> numeric;
};

std::set<Weight> cells_to_set(const std::vector<Cell>& cells, const Weight& l) {
  std::set<Weight> s;
  for (const auto& c : cells) s.insert(dot(parse_word(c.dot), star(parse_word(c.star), l)));
  return s;
}

bool jh_matches(const JHSet& got, const std::set<Weight>& named, const std::set<Weight>& numeric) {
  std::set<Weight> g;
  for (const auto& e : got.entries) {
    if (e.multiplicity != 2) return false;
    g.insert(e.weight);
  }
  return got.distinct() && g.size() == got.entries.size() && g == named && named == numeric;
}

bool c7_jh(std::string& detail) {
  static const std::vector<JHRow> c2 = {
      {3, {{"e", "s3 s2 s1"}, {"s3", "s2 s1"}, {"s3 s2", "s1"}, {"s3 s2 s1", "e"}},
       {"(0,0,0,2)", "(0,0,-1,3)", "(0,-1,-1,4)", "(-1,-1,-1,5)"}},
      {2, {{"s3", "s3 s2 s1"}, {"e", "s2 s1"}, {"s2", "s1"}, {"s2 s1", "e"}},
       {"(0,0,1,1)", "(0,0,2,0)", "(0,-1,3,0)", "(-1,-1,4,0)"}},
      {1, {{"s1 s3", "s3 s2 s1"}, {"s2", "s2 s1"}, {"e", "s1"}, {"s1", "e"}},
       {"(-1,1,1,1)", "(0,1,1,0)", "(0,2,0,0)", "(-1,3,0,0)"}},
      {0, {{"s1", "s1"}, {"e", "e"}}, {"(2,0,0,0)", "(1,1,0,0)"}},
  };
  static const std::vector<JHRow> nonint = {
      {0, {{"e", "e"}, {"s1", "s1"}, {"s1 s2", "s2 s1"}, {"s1 s2 s3", "s3 s2 s1"}},
       {"(c,0,0,0)", "(c-1,1,0,0)", "(c-2,1,1,0)", "(c-3,1,1,1)"}},
      {1, {{"s1", "e"}, {"e", "s1"}, {"s2", "s2 s1"}, {"s2 s3", "s3 s2 s1"}},
       {"(-1,c+1,0,0)", "(0,c,0,0)", "(0,c-1,1,0)", "(0,c-2,1,1)"}},
      {2, {{"s2 s1", "e"}, {"s2", "s1"}, {"e", "s2 s1"}, {"s3", "s3 s2 s1"}},
       {"(-1,-1,c+2,0)", "(0,-1,c+1,0)", "(0,0,c,0)", "(0,0,c-1,1)"}},
      {3, {{"s3 s2 s1", "e"}, {"s3 s2", "s1"}, {"s3", "s2 s1"}, {"e", "s3 s2 s1"}},
       {"(-1,-1,-1,c+3)", "(0,-1,-1,c+2)", "(0,0,-1,c+1)", "(0,0,0,c)"}},
  };
  std::vector<std::string> notes;
  bool ok = true;
  auto run_table = [&](const char* cname, const std::vector<JHRow>& rows) {
    const Scalar c = parse_scalar(cname);
    const Weight l = parse_weight(std::string("(") + cname + ",0,0,0)");
    int good = 0;
    for (const auto& row : rows) {
      std::set<Weight> numeric;
      for (const char* w : row.numeric) numeric.insert(W(w));
      bool row_ok = c_family_weight(4, c, row.k) == (row.k == 0 ? l : star(product_word(row.k, 1), l)) &&
                    jh_matches(jh_c_eps1(4, c, row.k), cells_to_set(row.cells, l), numeric);
      good += row_ok;
      ok = ok && row_ok;
    }
    notes.push_back(std::string("c=") + cname + ": " + std::to_string(good) + "/" + std::to_string(rows.size()) + " rows");
  };
  run_table("2", c2);
  run_table("c", nonint);

  // mu = c eps_4 row, written with simple roots.
  {
    const Scalar c = Scalar::param("c");
    const Weight mu = c_family_weight(4, c, 3);
    auto a = [](int i) { return simple_root(4, i); };
    std::set<Weight> want{mu, mu - a(3), mu - a(2) - Rational(2) * a(3), mu - a(1) - Rational(2) * a(2) - Rational(3) * a(3)};
    std::set<Weight> got;
    for (const auto& e : jh_c_eps1(4, c, 3).entries) got.insert(e.weight);
    bool row_ok = mu == W("(0,0,0,c)") && got == want;
    ok = ok && row_ok;
    notes.push_back(std::string("c eps_4 root form ") + (row_ok ? "ok" : "MISMATCH"));
  }

  int agree = 0, total = 0;
  for (const char* cname : {"2", "3", "-2", "0", "c"}) {
    const Scalar c = parse_scalar(cname);
    for (int k = 0; k < 4; ++k) {
      ++total;
      agree += jh_c_eps1(4, c, k).same_multiset(jh_c_eps1_direct(4, c, k));
    }
  }
  ok = ok && agree == total;
  notes.push_back("closed vs propagated " + std::to_string(agree) + "/" + std::to_string(total));
  detail = join(notes);
  return ok;
}

// ---- 8: degree identities ----

mpz_class binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// m when w = (0,...,0, -1 x m, c+m), else -1.
int minus_ones(const Weight& w, long c) {
  const int n = w.n();
  auto last = (w[n] - Scalar(c)).as_integer();
  if (!last || *last < 0 || *last > n - 1) return -1;
  const int m = static_cast<int>(*last);
  for (int i = 1; i < n; ++i)
    if (!(w[i] == Scalar(i > n - 1 - m ? -1 : 0))) return -1;
  return m;
}

bool c8_degrees(std::string& detail) {
  std::vector<std::string> notes;
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    mpz_class s2 = 0, s0 = 0;
    bool forms = true;
    for (const auto& e : jh_c_eps1(n, Scalar(2), n - 1).entries) {
      mpz_class d = degree_type_n1(e.weight);
      s2 += d;
      int m = minus_ones(e.weight, 2);
      forms = forms && m >= 0 && d == binom(n - 1, m);
    }
    for (const auto& e : jh_c_eps1(n, Scalar(0), n - 1).entries) {
      mpz_class d = degree_type_n1(e.weight);
      s0 += d;
      int m = minus_ones(e.weight, 0);
      mpz_class want = 0;
      for (int j = n - m; j <= n - 1; ++j) want += ((j - (n - m)) % 2 ? -1 : 1) * binom(n - 1, j);
      forms = forms && m >= 0 && d == want;
    }
    mpz_class p = mpz_class(1) << (n - 1);
    bool n_ok = forms && s2 == p && s0 == p / 2;
    ok = ok && n_ok;
    notes.push_back("n=" + std::to_string(n) + ": " + s2.get_str() + "/" + s0.get_str() + (n_ok ? "" : " FAIL"));
  }
  detail = join(notes);
  return ok;
}

// ---- 9: Fock oracle ----

bool c9_fock(std::string& detail) {
  std::vector<std::string> notes;
  bool ok = true;
  for (const CheckReport& r : {check_weight_spaces(50, 7), check_primitives(), check_u_relations()}) {
    ok = ok && r.passed;
    std::string note = r.check + " " + (r.passed ? "pass" : "FAIL") + " (" + std::to_string(r.cases) + " cases)";
    if (!r.passed && !r.witnesses.empty()) note += ": " + join(r.witnesses, ", ");
    notes.push_back(note);
  }
  detail = join(notes);
  return ok;
}

// ---- 10: string criterion vs normal forms ----

template <typename F>
void integral_grid(int n, int lo, int hi, F&& f) {
  std::vector<int> c(static_cast<size_t>(n), lo);
  while (true) {
    std::vector<Scalar> s(c.begin(), c.end());
    f(Weight(std::move(s)));
    int i = 0;
    while (i < n && c[static_cast<size_t>(i)] == hi) c[static_cast<size_t>(i++)] = lo;
    if (i == n) return;
    ++c[static_cast<size_t>(i)];
  }
}

bool in_box(const Weight& w, int r) {
  for (const auto& x : w.coords()) {
    auto v = x.as_integer();
    if (!v || *v < -r || *v > r) return false;
  }
  return true;
}

bool c10_cross(std::string& detail) {
  std::vector<std::string> notes;
  bool ok = true;
  for (int n = 3; n <= 4; ++n) {
    const int r = 3;
    // Normal forms have at most n-1 letters and each letter moves a coordinate
    // by at most one, so every anchor of a grid weight lies in the wider box.
    std::map<Weight, std::optional<TypeTag>> normal_forms;
    size_t anchors = 0;
    bool conflicts = false;
    integral_grid(n, -r - (n - 1), r + (n - 1), [&](const Weight& l) {
      MaximalInfo mi = maximal_info(l);
      if (!mi.is_maximal || mi.stabilizer.size() > 1) return;
      ++anchors;
      for (const auto& e : enumerate_bounded(l))
        if (in_box(e.weight, r)) {
          auto [it, fresh] = normal_forms.emplace(e.weight, e.type);
          if (!fresh && !(it->second == e.type)) conflicts = true;
        }
    });
    size_t points = 0, bounded = 0, mismatches = 0, dual_fail = 0;
    integral_grid(n, -r, r, [&](const Weight& mu) {
      ++points;
      Verdict v = classify(mu);
      auto it = normal_forms.find(mu);
      if (v.bounded() != (it != normal_forms.end()) || (it != normal_forms.end() && !(v.type == it->second)))
        ++mismatches;
      bounded += v.bounded();
      Verdict d = classify(iota(mu));
      bool dual_ok = d.kind == v.kind && iota(iota(mu)) == mu;
      if (dual_ok && v.type && v.type->kind == TypeTag::Kind::Int)
        dual_ok = d.type && *d.type == TypeTag::integral(n - v.type->k);
      dual_fail += !dual_ok;
    });
    ok = ok && !conflicts && mismatches == 0 && dual_fail == 0;
    notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(points) + " weights, " + std::to_string(bounded) +
                    " bounded, " + std::to_string(anchors) + " anchors, " + std::to_string(mismatches) +
                    " mismatches, " + std::to_string(dual_fail) + " duality failures");
  }
  detail = join(notes);
  return ok;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "q(3) orbit taxonomy", 1.0, c1_orbits},
      {2, "n=7 bounded table", 1.0, c2_table},
      {3, "n=7 family table", 0, c3_families},
      {4, "counting formulas", 0, c4_counting},
      {5, "string-length bound", 30.0, c5_strings},
      {6, "verdicts", 0, c6_verdicts},
      {7, "JH tables n=4", 0, c7_jh},
      {8, "degree identities", 1.0, c8_degrees},
      {9, "Fock oracle", 60.0, c9_fock},
      {10, "cross-oracle classification", 0, c10_cross},
  };
  return all;
}

Result run(const Criterion& c) {
  Result r;
  r.id = c.id;
  r.name = c.name;
  r.budget = c.budget;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = c.run(r.detail);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = r.budget == 0 || r.seconds < r.budget;
  if (!in_time) r.detail += "; over time budget";
  r.passed = ok && in_time;
  return r;
}

std::vector<Result> run_all() {
  std::vector<Result> out;
  for (const auto& c : criteria()) out.push_back(run(c));
  return out;
}

}  // namespace starq::acceptance
