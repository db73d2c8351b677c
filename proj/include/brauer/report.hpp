#pragma once

// JSON / CSV views of groups, character tables, Gram matrices and verdicts.
// Exact values are always present; floats ride alongside and are marked lossy.

#include <complex>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/characters.hpp"
#include "brauer/cyclotomic.hpp"
#include "brauer/groups.hpp"
#include "brauer/polyspace.hpp"
#include "brauer/verdicts.hpp"

namespace brauer {

using Json = nlohmann::ordered_json;

/// {"order": N, "terms": [[k, "num/den"], ...]} over the power basis mod Phi_N.
inline Json to_json(const CycNum& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms()) terms.push_back(Json::array({k, rational_string(c)}));
  return Json{{"order", v.order()}, {"terms", terms}};
}

inline std::string float_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

inline Json lossy_json(const CycNum& v) {
  const auto z = v.to_complex();
  return Json::array({std::stod(float_string(z.real())), std::stod(float_string(z.imag()))});
}

inline std::string lossy_string(const CycNum& v) {
  const auto z = v.to_complex();
  return float_string(z.real()) + (z.imag() < 0 ? "" : "+") + float_string(z.imag()) + "i";
}

inline Json tuple_json(const Tuple& t) { return Json(t); }

inline Json class_json(const Group& g, const std::vector<int>& cls) {
  Json out = Json::array();
  for (int x : cls) out.push_back(g.render(x));
  return out;
}

inline Json group_json(const Group& g, int p) {
  const auto reg = pregular(g, p);
  Json classes = Json::array();
  Json sizes = Json::array();
  for (const auto& c : reg.classes) {
    classes.push_back(class_json(g, c));
    sizes.push_back(c.size());
  }
  Json j;
  j["family"] = family_name(g.family());
  j[g.family() == Family::Semidihedral ? "n" : "m"] = g.param();
  j["order"] = g.order();
  j["action"] = action_name(g.action());
  j["degree"] = g.degree();
  j["p"] = p;
  j["l"] = reg.split.l;
  j["t"] = reg.split.t;
  j["pregular_elements"] = reg.elements.size();
  j["pregular_class_count"] = reg.classes.size();
  j["pregular_class_sizes"] = sizes;
  j["pregular_classes"] = classes;
  return j;
}

inline Json table_json(const Group& g, const CharTable& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes) classes.push_back(g.render(c.front()));
  Json rows = Json::array();
  for (const auto& chi : t.rows) {
    Json exact = Json::array();
    Json lossy = Json::array();
    for (const auto& c : t.classes) {
      exact.push_back(to_json(chi(c.front())));
      lossy.push_back(lossy_json(chi(c.front())));
    }
    rows.push_back(Json{{"label", chi.display_label()},
                        {"degree", chi.degree},
                        {"values", exact},
                        {"values_float_lossy", lossy}});
  }
  return Json{{"kind", t.prime == 0 ? "ordinary" : "brauer"},
              {"p", t.prime},
              {"class_representatives", classes},
              {"rows", rows}};
}

/// label, then one column per class representative; cells "exact | float~".
inline std::string table_csv(const Group& g, const CharTable& t) {
  std::ostringstream os;
  os << "label";
  for (const auto& c : t.classes) os << ',' << g.render(c.front());
  os << '\n';
  for (const auto& chi : t.rows) {
    os << chi.display_label();
    for (const auto& c : t.classes) os << ",\"" << chi(c.front()).to_string() << " | " << lossy_string(chi(c.front())) << "~\"";
    os << '\n';
  }
  return os.str();
}

inline Json gram_json(const Group& g, const GramMatrix& gm, const std::string& side) {
  Json index = Json::array();
  for (int s : gm.index) index.push_back(g.render(s));
  Json exact = Json::array();
  Json lossy = Json::array();
  for (const auto& row : gm.entries) {
    Json er = Json::array();
    Json lr = Json::array();
    for (const auto& v : row) {
      er.push_back(to_json(v));
      lr.push_back(lossy_json(v));
    }
    exact.push_back(er);
    lossy.push_back(lr);
  }
  return Json{{"side", side}, {"size", gm.size()}, {"index", index}, {"entries", exact}, {"entries_float_lossy", lossy}};
}

/// Lossy CSV view (12 significant digits); the header row says so.
inline std::string gram_csv(const Group& g, const GramMatrix& gm, const std::string& side) {
  std::ostringstream os;
  os << "# side=" << side << " lossy=true digits=12\n";
  os << "sigma";
  for (int s : gm.index) os << ',' << g.render(s);
  os << '\n';
  for (std::size_t i = 0; i < gm.size(); ++i) {
    os << g.render(gm.index[i]);
    for (const auto& v : gm.entries[i]) os << ',' << lossy_string(v);
    os << '\n';
  }
  return os.str();
}

inline Json witness_json(const Group& g, const std::optional<std::vector<int>>& w) {
  if (!w) return nullptr;
  Json out = Json::array();
  for (int s : *w) out.push_back(g.render(s));
  return out;
}

inline Json verdict_json(const Group& g, const ObasisVerdict& v) {
  return Json{{"exists", v.exists},
              {"source", v.source == VerdictSource::ClosedForm ? "closed_form" : "brute_force"},
              {"scope", v.global ? "global" : "orbital"},
              {"rank", v.rank},
              {"witness", witness_json(g, v.witness)}};
}

}  // namespace brauer
