#include "ordgen/report.hpp"

#include <algorithm>
#include <sstream>

namespace ordgen {

std::string rational_string(const mpq_class& x) {
  mpq_class c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string decimal_string(const mpq_class& x, int digits) {
  mpf_class f(x, 256);
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  if (mant.empty()) return "0";
  std::string sign;
  if (mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out;
  if (exp <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else if (static_cast<std::size_t>(exp) >= mant.size()) {
    out = mant + std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
  } else {
    out = mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
  }
  return sign + out;
}

namespace {

Json spec_summary(const OrderSpec& spec) {
  Json j;
  j["dimension"] = spec.total_dimension().get_str();
  j["free_over_base"] = spec.free_over_base;
  Json factors = Json::array();
  for (const auto& f : spec.factors) {
    factors.push_back({{"name", f.name},
                       {"degree", f.degree},
                       {"center_degree", f.center_degree()},
                       {"copies", f.copies}});
  }
  j["factors"] = factors;
  return j;
}

Json terms_json(const std::vector<DeficiencyTerm>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) arr.push_back({{"coeff", t.coeff.get_str()}, {"exponent", t.exponent}});
  return arr;
}

std::string aligned(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(w - k.size() + 2, ' ') << v << "\n";
  return os.str();
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

}  // namespace

Json verdict_json(const OrderSpec& spec, const Verdict& v) {
  Json j;
  j["command"] = "analyze";
  j["h"] = v.h;
  j["kind"] = std::string(to_string(v.kind));
  j["refined"] = v.refined ? Json(*v.refined) : Json(nullptr);
  j["annotation"] = v.annotation;
  j["r_K"] = v.r_k;
  j["critical_primes"] = v.critical_primes;
  j["approximate"] = v.approximate;
  Json cut;
  cut["k"] = v.cutoff.k;
  cut["q0"] = v.cutoff.q0;
  cut["margin_at_q0"] = rational_string(v.cutoff.margin_at_q0);
  cut["margin_below_q0"] = v.cutoff.margin_below_q0 ? Json(rational_string(*v.cutoff.margin_below_q0)) : Json(nullptr);
  Json groups = Json::array();
  for (const auto& g : v.cutoff.groups) {
    groups.push_back({{"n", g.n}, {"r", g.r}, {"worst_copies", g.worst_copies}, {"bound", terms_json(g.last_term)}});
  }
  cut["groups"] = groups;
  j["cutoff"] = cut;
  Json checked = Json::array();
  for (const auto& c : v.checked) checked.push_back({{"p", c.p}, {"min_k", c.min_k}, {"approximate", c.approximate}});
  j["checked"] = checked;
  j["spec"] = spec_summary(spec);
  return j;
}

Json density_json(const OrderSpec& spec, const DensityInterval& d) {
  Json j;
  j["command"] = "density";
  j["k"] = d.k;
  j["bound"] = d.bound;
  j["zero"] = d.zero;
  j["zero_reason"] = d.zero_reason;
  j["lower"] = rational_string(d.lower);
  j["upper"] = rational_string(d.upper);
  j["tail"] = d.tail ? Json(rational_string(*d.tail)) : Json(nullptr);
  Json factors = Json::array();
  for (const auto& f : d.factors) factors.push_back({{"p", f.p}, {"factor", rational_string(f.value)}});
  j["factors"] = factors;
  j["notes"] = d.notes;
  j["spec"] = spec_summary(spec);
  return j;
}

Json quaternion_json(const QuaternionTable& t) {
  Json j;
  j["command"] = "quaternion";
  j["ramified"] = t.ramified;
  j["m_max"] = t.m_max;
  j["h"] = t.h;
  Json ranges = Json::array();
  for (const auto& r : t.ranges) {
    ranges.push_back({{"h", r.h}, {"m_from", r.m_from}, {"m_to", r.m_to}, {"open", r.open}});
  }
  j["ranges"] = ranges;
  return j;
}

Json estimate_json(const FiniteAlgebra& a, int k, std::uint64_t seed, const SampleEstimate& e) {
  Json j;
  j["command"] = "oracle";
  j["mode"] = "sample";
  j["algebra"] = a.label();
  j["dim"] = a.dim();
  j["k"] = k;
  j["seed"] = seed;
  j["samples"] = e.samples;
  j["hits"] = e.hits;
  j["fraction"] = rational_string(mpq_class(mpz_class(std::to_string(e.hits)), mpz_class(std::to_string(e.samples))));
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  return j;
}

std::string render_machine(const Json& doc) { return doc.dump(2) + "\n"; }

std::string render_verdict_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("h", std::to_string(j["h"].get<int>()));
  std::string kind = j["kind"].get<std::string>();
  if (!j["refined"].is_null()) kind += " -> EXACT(" + std::to_string(j["refined"].get<int>()) + ")";
  rows.emplace_back("verdict", kind);
  if (!j["annotation"].get<std::string>().empty()) rows.emplace_back("note", j["annotation"].get<std::string>());
  rows.emplace_back("r_K", std::to_string(j["r_K"].get<int>()));
  std::string crit;
  for (const auto& p : j["critical_primes"]) crit += (crit.empty() ? "" : " ") + p.dump();
  rows.emplace_back("critical primes", crit.empty() ? "-" : crit);
  const auto& cut = j["cutoff"];
  rows.emplace_back("cutoff", "every other prime p >= " + cut["q0"].dump() + " passes at k=" + cut["k"].dump() +
                                  " (worst bound " +
                                  decimal_string(parse_rational(cut["margin_at_q0"].get<std::string>()), 6) +
                                  " < 1)");
  std::string checked;
  for (const auto& c : j["checked"]) {
    checked += (checked.empty() ? "" : " ") + c["p"].dump() + ":" + c["min_k"].dump();
    if (c["approximate"].get<bool>()) checked += "~";
  }
  rows.emplace_back("checked p:k", checked.empty() ? "-" : checked);
  if (j["approximate"].get<bool>()) rows.emplace_back("warning", "rank >= 4 bounded, h is an upper bound");
  rows.emplace_back("dimension", j["spec"]["dimension"].get<std::string>());
  return aligned(rows);
}

std::string render_density_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("k", j["k"].dump());
  rows.emplace_back("prime bound", j["bound"].dump());
  if (j["zero"].get<bool>()) {
    rows.emplace_back("density", "0 (certified)");
    rows.emplace_back("reason", j["zero_reason"].get<std::string>());
  } else {
    const auto lo = parse_rational(j["lower"].get<std::string>());
    const auto hi = parse_rational(j["upper"].get<std::string>());
    rows.emplace_back("lower", decimal_string(lo));
    rows.emplace_back("upper", decimal_string(hi));
    rows.emplace_back("width", decimal_string(hi - lo, 6));
    if (!j["tail"].is_null()) rows.emplace_back("tail bound", decimal_string(parse_rational(j["tail"].get<std::string>()), 6));
    rows.emplace_back("primes", std::to_string(j["factors"].size()));
  }
  for (const auto& n : j["notes"]) rows.emplace_back("note", n.get<std::string>());
  return aligned(rows);
}

std::string render_quaternion_text(const Json& j) {
  std::ostringstream os;
  std::string ram;
  for (const auto& p : j["ramified"]) ram += (ram.empty() ? "" : ",") + p.dump();
  os << "ramified at {" << ram << "}, m <= " << j["m_max"].dump() << "\n";
  os << "h  m range\n";
  for (const auto& r : j["ranges"]) {
    os << r["h"].dump() << "  " << r["m_from"].dump() << ".." << r["m_to"].dump()
       << (r.value("open", false) ? "+" : "") << "\n";
  }
  std::string thresholds;
  for (const auto& r : j["ranges"]) {
    if (r.value("open", false)) continue;
    thresholds += (thresholds.empty() ? "" : " / ") + r["m_to"].dump();
  }
  os << "thresholds " << (thresholds.empty() ? "-" : thresholds) << "\n";
  return os.str();
}

std::string render_flat_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [k, v] : j.items()) {
    if (k == "command") continue;
    rows.emplace_back(k, scalar(v));
  }
  return aligned(rows);
}

}  // namespace ordgen
