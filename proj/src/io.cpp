#include "hkoebe/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hkoebe {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_double(x) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

Json complex_pair(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

std::string dump_deterministic(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json series_to_json(const Series& s) {
  Json arr = Json::array();
  for (Eigen::Index n = 0; n <= s.order(); ++n) arr.push_back(complex_pair(s.coeffs()[n]));
  return arr;
}

Series series_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("series must be a non-empty array of [re, im] pairs");
  Series::Coeffs c(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ParseError("series entry " + std::to_string(i) + " is not a [re, im] pair of numbers");
    }
    c[static_cast<Eigen::Index>(i)] = {pair[0].get<double>(), pair[1].get<double>()};
  }
  try {
    return Series(std::move(c));
  } catch (const NonFiniteValue& e) {
    throw ParseError(e.what());
  }
}

Json map_to_json(const MapSource& source, const Json& meta) {
  Json j = Json::object();
  if (const auto* id = std::get_if<ClosedFormId>(&source)) {
    j["closed_form"] = id->name();
    if (id->kind == ClosedFormKind::HarmonicKoebe) j["m"] = id->m;
  } else {
    const auto& map = std::get<HarmonicMap<double>>(source);
    j["h"] = series_to_json(map.h());
    j["g"] = series_to_json(map.g());
  }
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

MapSource map_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("map JSON must be an object");
  if (j.contains("closed_form")) {
    if (!j["closed_form"].is_string()) throw ParseError("\"closed_form\" must be a string");
    try {
      const auto id = ClosedFormId::parse(j["closed_form"].get<std::string>());
      if (j.contains("m") && (!j["m"].is_number_integer() || j["m"].get<int>() != id.m)) {
        throw ParseError("\"m\" does not match the closed form name");
      }
      return id;
    } catch (const InvalidSpec& e) {
      throw ParseError(e.what());
    }
  }
  if (!j.contains("h") || !j.contains("g")) throw ParseError("map JSON needs \"h\" and \"g\" or \"closed_form\"");
  return HarmonicMap<double>(series_from_json(j["h"]), series_from_json(j["g"]));
}

Json report_to_json(const BoundReport& report) {
  Json j = Json::object();
  j["name"] = report.name;
  j["inputs"] = Json::object();
  for (const auto& [k, v] : report.inputs) j["inputs"][k] = v;
  j["value"] = report.value;
  j["measured"] = report.measured ? Json(*report.measured) : Json(nullptr);
  j["pass"] = report.pass ? Json(*report.pass) : Json(nullptr);
  j["witness"] = report.witness ? complex_pair(*report.witness) : Json(nullptr);
  return j;
}

Json radius_to_json(const RadiusEstimate& e) {
  Json ladder = Json::array();
  for (const auto& [r, m] : e.r_ladder) ladder.push_back(Json::array({r, m}));
  return Json{{"value", e.value},     {"argmin_theta", e.argmin_theta}, {"r_ladder", ladder},
              {"extrapolated", e.extrapolated}, {"j_lo", e.j_lo}, {"j_hi", e.j_hi}, {"clipped", e.clipped}};
}

Json modulus_check_to_json(const ModulusCheck& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  return Json{{"params", params}, {"closed_form", c.closed_form}, {"numeric", c.numeric}, {"residual", c.residual}};
}

Json area_to_json(const AreaEstimate& e) { return Json{{"value", e.value}, {"divergent", e.divergent}}; }

std::string boundary_csv(const BoundaryProfile& p) {
  std::string out = "theta,re,im,modulus\n";
  for (std::size_t i = 0; i < p.thetas.size(); ++i) {
    out += format_double(p.thetas[i]) + ',' + format_double(p.values[i].real()) + ',' +
           format_double(p.values[i].imag()) + ',' + format_double(p.moduli[i]) + '\n';
  }
  return out;
}

}  // namespace hkoebe
