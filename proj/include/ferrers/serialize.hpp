#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "graph_io.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "verifier.hpp"

namespace ferrers {

using json = nlohmann::ordered_json;

inline json to_json(const VerificationRecord& r) {
  return json{{"graph", to_text(r.graph)},
              {"m", r.graph.m()},
              {"n", r.graph.n()},
              {"tau", r.tau.get_str()},
              {"F", to_string(r.F)},
              {"degree_product", r.degree_product.get_str()},
              {"inequality_ok", r.inequality_ok},
              {"equality", r.equality},
              {"ferrers", r.ferrers},
              {"reduction_ok", r.reduction_ok},
              {"majorizes", r.majorizes}};
}

inline json to_json(const SpectralReport& r) {
  std::vector<std::string> defects;
  defects.reserve(r.defect_sums.size());
  for (const auto& d : r.defect_sums) defects.push_back(to_string(d));
  return json{{"lambda", r.lambda.values},
              {"residual", r.lambda.residual},
              {"a_sorted", r.a_sorted},
              {"partial_gaps", r.partial_gaps},
              {"defect_sums", defects},
              {"trace_gap", r.trace_gap},
              {"majorizes", r.majorizes},
              {"strengthened", r.strengthened},
              {"positive_definite", r.positive_definite}};
}

inline json to_json(const CampaignSummary& s) {
  json dims = json::array();
  for (auto [m, n] : s.dims) dims.push_back({m, n});
  return json{{"dims", dims},
              {"graphs_checked", s.graphs_checked},
              {"violations", s.violations},
              {"equality_cases", s.equality_cases},
              {"ferrers_count", s.ferrers_count},
              {"wall_time", s.wall_time}};
}

/// CSV: a header row of keys and one row of values. Arrays are joined with
/// ';'; strings containing separators or quotes are quoted.
inline std::string to_csv(const json& flat) {
  auto cell = [](const json& v) {
    std::string s;
    if (v.is_array()) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ';';
        s += v[k].is_string() ? v[k].get<std::string>() : v[k].dump();
      }
    } else if (v.is_string()) {
      s = v.get<std::string>();
    } else {
      s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + "\"";
    }
    return s;
  };
  std::string header, row;
  bool first = true;
  for (const auto& [key, value] : flat.items()) {
    if (!first) {
      header += ',';
      row += ',';
    }
    first = false;
    header += key;
    row += cell(value);
  }
  return header + "\n" + row + "\n";
}

/// "key: value" lines, arrays space-separated.
inline std::string to_plain(const json& flat) {
  std::ostringstream os;
  for (const auto& [key, value] : flat.items()) {
    os << key << ':';
    if (value.is_array()) {
      for (const auto& v : value) os << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
    } else if (value.is_string()) {
      const auto s = value.get<std::string>();
      if (s.find('\n') != std::string::npos)
        os << '\n' << s;
      else
        os << ' ' << s;
    } else {
      os << ' ' << value.dump();
    }
    if (!value.is_string() || value.get<std::string>().find('\n') == std::string::npos) os << '\n';
  }
  return os.str();
}

}  // namespace ferrers
