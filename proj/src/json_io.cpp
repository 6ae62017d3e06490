#include <falg/json_io.hpp>

#include <stdexcept>

namespace falg {

namespace {

using nlohmann::json;

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

json poly_to_json(const Poly1& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.get_str()});
  return out;
}

json poly_to_json(const LaurentPoly1& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, c.get_str()});
  return out;
}

json poly_to_json(const Poly2& p) {
  json out = json::array();
  for (const auto& [k, c] : p.terms())
    out.push_back({k.first, k.second, c.get_str()});
  return out;
}

Poly1 poly1_from_json(const json& j) {
  Poly1 p;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("polynomial term must be [exponent, coeff]");
    p.add_term(entry[0].get<long>(), int_from_json(entry[1]));
  }
  return p;
}

LaurentPoly1 laurent1_from_json(const json& j) {
  LaurentPoly1 p;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::invalid_argument("polynomial term must be [exponent, coeff]");
    p.add_term(entry[0].get<long>(), int_from_json(entry[1]));
  }
  return p;
}

Poly2 poly2_from_json(const json& j) {
  Poly2 p;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("polynomial term must be [xexp, yexp, coeff]");
    p.add_term(entry[0].get<long>(), entry[1].get<long>(),
               int_from_json(entry[2]));
  }
  return p;
}

json hilbert_to_json(const HilbertFunction& h) {
  json dims = json::array();
  for (const Int& d : h.dims) dims.push_back(int_to_json(d));
  return json{{"t", h.t}, {"dims", dims}};
}

HilbertFunction hilbert_from_json(const json& j) {
  HilbertFunction h;
  h.t = j.at("t").get<long>();
  if (h.t < 1) throw std::invalid_argument("t must be >= 1");
  for (const auto& d : j.at("dims")) {
    Int v = int_from_json(d);
    if (v < 0) throw std::invalid_argument("negative dimension");
    h.dims.push_back(std::move(v));
  }
  return h;
}

json activity_table_to_json(const ActivityTable& t) {
  json counts = json::array();
  for (const auto& [key, n] : t.counts)
    counts.push_back({key.first, key.second, n});
  return json{{"v", t.v}, {"e", t.e}, {"c", t.c}, {"counts", counts}};
}

ActivityTable activity_table_from_json(const json& j) {
  ActivityTable t;
  t.v = j.at("v").get<int>();
  t.e = j.at("e").get<std::size_t>();
  t.c = j.at("c").get<int>();
  for (const auto& entry : j.at("counts")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("count entry must be [a, b, N]");
    t.counts[{entry[0].get<std::size_t>(), entry[1].get<std::size_t>()}] =
        entry[2].get<std::uint64_t>();
  }
  return t;
}

json counts_to_json(const RecoveredCounts& rc) {
  json out = json::array();
  for (const auto& [key, n] : rc.counts)
    out.push_back({key.first, key.second, int_to_json(n)});
  return out;
}

RecoveredCounts counts_from_json(const json& j) {
  RecoveredCounts rc;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("count entry must be [a, b, N]");
    rc.counts[{entry[0].get<long>(), entry[1].get<long>()}] =
        int_from_json(entry[2]);
  }
  return rc;
}

}  // namespace falg
