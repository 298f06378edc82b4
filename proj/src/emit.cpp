#include "starq/emit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace starq {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string type_str(const std::optional<TypeTag>& t, bool gl) {
  if (!t) return "";
  return gl ? t->gl_str() : t->str();
}

Json type_json(const std::optional<TypeTag>& t, bool gl) {
  if (!t) return nullptr;
  return type_str(t, gl);
}

const char* relation_name(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
    case Order::Incomparable: return "incomparable";
  }
  return "incomparable";
}

const char* family_kind(Family::Kind k) {
  switch (k) {
    case Family::Kind::RegularIntegral: return "regular";
    case Family::Kind::Singular: return "singular";
    case Family::Kind::Nonintegral: return "nonintegral";
  }
  return "regular";
}

std::string pad(const std::string& s, size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

}  // namespace

Json weight_json(const Weight& w) { return w.str(); }

Json orbit_json(const OrbitGraph& g) {
  Json j;
  j["n"] = g.n;
  Json vs = Json::array();
  for (const auto& v : g.vertices) vs.push_back(v.str());
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : g.edges)
    es.push_back({{"from", e.from.str()}, {"label", e.label}, {"to", e.to.str()}, {"relation", relation_name(e.relation)}});
  j["edges"] = es;
  Json ms = Json::array();
  for (const auto& m : g.maximal()) ms.push_back(m.str());
  j["maximal"] = ms;
  j["truncated"] = g.truncated;
  return j;
}

std::string orbit_dot(const OrbitGraph& g) {
  std::ostringstream o;
  o << "digraph orbit {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& v : g.vertices) o << "  " << quote(v.str()) << ";\n";
  for (const auto& e : g.edges) {
    // Lower vertex points up to the bigger one.
    switch (e.relation) {
      case Order::Greater:
        o << "  " << quote(e.to.str()) << " -> " << quote(e.from.str()) << " [label=\"" << e.label << "\", arrowhead=none];\n";
        break;
      case Order::Less:
        o << "  " << quote(e.from.str()) << " -> " << quote(e.to.str()) << " [label=\"" << e.label << "\", arrowhead=none];\n";
        break;
      case Order::Equal:
        o << "  " << quote(e.from.str()) << " -> " << quote(e.to.str()) << " [label=\"" << e.label << "\", arrowhead=none];\n";
        break;
      case Order::Incomparable:
        o << "  " << quote(e.from.str()) << " -> " << quote(e.to.str()) << " [label=\"" << e.label
          << "\", arrowhead=none, style=dotted, constraint=false];\n";
        break;
    }
  }
  o << "}\n";
  return o.str();
}

std::string orbit_table(const OrbitGraph& g) {
  size_t w = 0;
  for (const auto& e : g.edges) w = std::max(w, e.from.str().size());
  std::ostringstream o;
  o << "vertices " << g.vertices.size() << (g.truncated ? " (truncated)" : "") << "\n";
  for (const auto& e : g.edges)
    o << pad(e.from.str(), w) << "  s" << e.label << "  " << pad(relation_name(e.relation), 12) << e.to.str() << "\n";
  o << "maximal";
  for (const auto& m : g.maximal()) o << "  " << m.str();
  o << "\n";
  return o.str();
}

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::FiniteDimensional: return "finite_dimensional";
    case Verdict::Kind::BoundedInfinite: return "bounded";
    case Verdict::Kind::Unbounded: return "unbounded";
  }
  return "unbounded";
}

Json verdict_json(const Weight& mu, const Verdict& v, bool gl) {
  Json j;
  j["weight"] = mu.str();
  j["algebra"] = gl ? "gl" : "q";
  j["verdict"] = verdict_name(v.kind);
  bool known = v.kind != Verdict::Kind::Unbounded;
  j["class"] = known ? Json(class_name(v.cls)) : Json(nullptr);
  j["type"] = type_json(v.type, gl);
  j["maximal"] = known ? Json(v.maximal.str()) : Json(nullptr);
  j["word"] = known ? Json(format_word(v.word)) : Json(nullptr);
  j["family_id"] = v.family_id.empty() ? Json(nullptr) : Json(v.family_id);
  j["reason"] = v.kind == Verdict::Kind::Unbounded ? Json(reason_name(v.reason)) : Json(nullptr);
  return j;
}

std::string verdict_table(const Weight& mu, const Verdict& v, bool gl) {
  std::ostringstream o;
  o << "weight     " << mu.str() << "\n";
  o << "verdict    " << verdict_name(v.kind) << "\n";
  if (v.kind != Verdict::Kind::Unbounded) {
    o << "class      " << class_name(v.cls) << "\n";
    if (v.type) o << "type       " << type_str(v.type, gl) << "\n";
    o << "maximal    " << v.maximal.str() << "\n";
    o << "word       " << format_word(v.word) << "\n";
    if (!v.family_id.empty()) o << "family     " << v.family_id << "\n";
  } else {
    o << "reason     " << reason_name(v.reason) << "\n";
  }
  return o.str();
}

Json enumerate_json(const Weight& l, const std::vector<BoundedEntry>& entries) {
  Json j;
  j["lambda"] = l.str();
  ZF zf = z_f(l);
  j["z"] = zf.z;
  j["f"] = zf.f;
  j["count"] = entries.size();
  Json es = Json::array();
  for (const auto& e : entries)
    es.push_back({{"weight", e.weight.str()}, {"type", type_json(e.type, false)}, {"word", format_word(e.word)}});
  j["weights"] = es;
  return j;
}

std::string enumerate_table(const Weight& l, const std::vector<BoundedEntry>& entries) {
  std::map<int, std::vector<const BoundedEntry*>> by_type;
  for (const auto& e : entries)
    if (e.type) by_type[e.type->k].push_back(&e);
  std::ostringstream o;
  ZF zf = z_f(l);
  o << "lambda = " << l.str() << "  z=" << zf.z << " f=" << zf.f << "  bounded weights: " << entries.size() << "\n";
  for (const auto& [k, es] : by_type) {
    o << "type " << k << " |";
    for (size_t i = 0; i < es.size(); ++i) o << (i ? ", " : " ") << format_word(es[i]->word) << "*lambda";
    o << "\n";
  }
  return o.str();
}

Json families_json(const Weight& l, const std::vector<Family>& fams) {
  Json j;
  j["lambda"] = l.str();
  Json fs = Json::array();
  for (const auto& f : fams) {
    Json fj;
    fj["id"] = f.id();
    fj["kind"] = family_kind(f.kind);
    fj["algebra"] = f.dashed ? "gl" : "q";
    fj["regularities"] = f.regularities;
    fj["singularity"] = f.kind == Family::Kind::Singular ? Json(f.singularity) : Json(nullptr);
    fj["anchor"] = f.anchor.str();
    Json ms = Json::array();
    for (const auto& m : f.members)
      ms.push_back({{"weight", m.weight.str()}, {"type", type_json(m.type, f.dashed)}, {"word", format_word(m.word)}});
    fj["members"] = ms;
    Json as = Json::array();
    for (const auto& a : f.arrows)
      as.push_back({{"from", a.from.str()},
                    {"label", a.label},
                    {"to", a.to.str()},
                    {"bidirectional", a.bidirectional},
                    {"entry", a.entry}});
    fj["arrows"] = as;
    fs.push_back(fj);
  }
  j["families"] = fs;
  return j;
}

std::string families_dot(const std::vector<Family>& fams) {
  std::ostringstream o;
  o << "digraph families {\n  rankdir=LR;\n  node [shape=box];\n";
  for (size_t i = 0; i < fams.size(); ++i) {
    const Family& f = fams[i];
    o << "  subgraph cluster_" << i << " {\n    label=" << quote(f.id()) << ";\n";
    for (const auto& m : f.members)
      o << "    " << quote(f.id() + "|" + m.weight.str()) << " [label=\"" << m.weight.str() << "\\n"
        << type_str(m.type, f.dashed) << "\"];\n";
    o << "  }\n";
    std::string style = f.dashed ? ", style=dashed" : "";
    for (const auto& a : f.arrows) {
      std::string from = a.entry ? f.id() + "|entry" : f.id() + "|" + a.from.str();
      if (a.entry) o << "  " << quote(from) << " [label=\"" << a.from.str() << "\", shape=plaintext];\n";
      o << "  " << quote(from) << " -> " << quote(f.id() + "|" + a.to.str()) << " [label=\"" << a.label << "\"" << style
        << (a.bidirectional ? ", dir=both" : "") << "];\n";
    }
  }
  o << "}\n";
  return o.str();
}

std::string families_table(const std::vector<Family>& fams) {
  std::ostringstream o;
  for (const auto& f : fams) {
    o << f.id() << "\n";
    for (const auto& m : f.members)
      o << "  " << pad(type_str(m.type, f.dashed), 18) << pad(format_word(m.word), 24) << m.weight.str() << "\n";
    for (const auto& a : f.arrows)
      o << "  " << a.from.str() << (a.bidirectional ? " <-" : " -") << a.label << "-> " << a.to.str()
        << (a.entry ? "  (entry)" : "") << "\n";
  }
  return o.str();
}

Json degree_json(const Weight& mu, const mpz_class& deg) {
  Json j;
  j["weight"] = mu.str();
  j["degree"] = deg.get_str();
  j["convention"] = kDegreeConvention;
  return j;
}

Json jh_json(int n, const Scalar& c, const std::vector<int>& ks) {
  Json j;
  j["n"] = n;
  j["c"] = c.str();
  Json rows = Json::array();
  for (int k : ks) {
    Json es = Json::array();
    for (const auto& e : jh_c_eps1(n, c, k).entries) es.push_back({{"weight", e.weight.str()}, {"multiplicity", e.multiplicity}});
    rows.push_back({{"k", k}, {"weight", c_family_weight(n, c, k).str()}, {"entries", es}});
  }
  j["rows"] = rows;
  return j;
}

Json check_json(const CheckReport& r) {
  return {{"check", r.check}, {"status", r.passed ? "pass" : "fail"}, {"cases", r.cases}, {"witnesses", r.witnesses}};
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace starq
