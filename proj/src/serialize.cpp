#include "srgeo/serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "srgeo/errors.hpp"

namespace srgeo {

namespace {

nlohmann::ordered_json meta_json(const RunMeta& m) {
  nlohmann::ordered_json j;
  j["a"] = m.a;
  j["region"] = std::string(to_string(m.region));
  j["k"] = m.k;
  j["theta0"] = m.theta0;
  j["signs"] = {{"s1", m.s1}, {"s2", m.s2}, {"parity", m.parity}};
  return j;
}

}  // namespace

RunMeta make_meta(const Geodesic& geo) {
  const EllipticData& ed = geo.elliptic();
  RunMeta m;
  m.a = geo.params().a();
  m.region = ed.region;
  m.k = ed.k.k();
  m.theta0 = ed.theta0;
  m.s1 = ed.s1;
  m.s2 = ed.s2;
  m.parity = ed.parity;
  return m;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) {
    throw DomainError("cannot serialise a non-finite number");
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string samples_to_json(const RunMeta& meta, const std::vector<GeodesicSample>& samples,
                            int indent) {
  nlohmann::ordered_json root;
  root["meta"] = meta_json(meta);
  auto& arr = root["samples"] = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    nlohmann::ordered_json j;
    j["t"] = s.t;
    auto& r = j["R"] = nlohmann::ordered_json::array();
    for (int i = 0; i < 3; ++i) {
      for (int c = 0; c < 3; ++c) {
        r.push_back(s.R(i, c));
      }
    }
    j["q"] = {s.q.q0, s.q.q1, s.q.q2, s.q.q3};
    j["p"] = {s.p.p1, s.p.p2, s.p.p3};
    j["phi3"] = s.phi.phi3;
    arr.push_back(std::move(j));
  }
  return root.dump(indent);
}

std::string samples_to_csv(const RunMeta& meta, const std::vector<GeodesicSample>& samples) {
  std::ostringstream out;
  out << "# a=" << format_number(meta.a) << " region=" << to_string(meta.region)
      << " k=" << format_number(meta.k) << " theta0=" << format_number(meta.theta0)
      << " s1=" << meta.s1 << " s2=" << meta.s2 << " parity=" << meta.parity << '\n';
  out << "t,R11,R12,R13,R21,R22,R23,R31,R32,R33,q0,q1,q2,q3,p1,p2,p3,phi3\n";
  for (const auto& s : samples) {
    out << format_number(s.t);
    for (int i = 0; i < 3; ++i) {
      for (int c = 0; c < 3; ++c) {
        out << ',' << format_number(s.R(i, c));
      }
    }
    for (double v : {s.q.q0, s.q.q1, s.q.q2, s.q.q3, s.p.p1, s.p.p2, s.p.p3, s.phi.phi3}) {
      out << ',' << format_number(v);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace srgeo
