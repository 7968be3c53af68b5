#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bipartite_graph.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "graph_io.hpp"
#include "serialize.hpp"
#include "spectral.hpp"
#include "tree_count.hpp"
#include "verifier.hpp"

namespace ferrers::cli {

enum class Format { json, csv, plain };

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct Settings {
  Format format = Format::json;
  double tol = kDefaultTol;
  std::size_t cap = default_cap();
  bool dedupe = false;
  bool biadj = false;
  bool fault_inject = false;
  bool quiet = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

namespace detail {

inline std::vector<std::size_t> parse_index_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw format_error(std::string("malformed ") + what + " '" + text + "'");
    out.push_back(std::stoul(tok));
  }
  if (out.empty()) throw format_error(std::string("empty ") + what);
  return out;
}

inline VertexSet parse_set(const std::string& text) {
  VertexSet s;
  for (auto i : parse_index_list(text, "vertex set")) s.insert(i);
  return s;
}

inline void emit(std::ostream& out, const json& j, Format f) {
  switch (f) {
    case Format::json: out << j.dump() << '\n'; break;
    case Format::csv: out << to_csv(j); break;
    case Format::plain: out << to_plain(j); break;
  }
}

inline std::vector<Rational> random_weights(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 10), den(1, 10), coin(0, 4);
  std::vector<Rational> z;
  z.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    Rational r(coin(rng) == 0 ? 0 : num(rng), den(rng));
    r.canonicalize();
    z.push_back(r);
  }
  return z;
}

}  // namespace detail

/// Entry point behind the `ferrers` tool. Reads graphs from `in` when no
/// file argument is given (or it is "-").
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  static const std::vector<std::string> verbs = {
      "tau",   "invariant", "check",          "spectrum",  "majorize", "overlap",
      "ferrers-gen", "ferrers-detect", "enumerate", "verify", "corollary"};

  Settings s;
  CLI::App app{"Spanning-tree counts, the Ferrers invariant, and exhaustive checks of the "
               "Ferrers bound for bipartite graphs",
               "ferrers"};
  app.require_subcommand(1);
  app.fallthrough();
  std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
  app.add_option("--format", s.format, "Output format: json, csv or plain")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--tol", s.tol, "Absolute tolerance for floating checks")->check(CLI::PositiveNumber);
  app.add_option("--cap", s.cap, "Cap on m*n (enumeration) and |E| (brute force)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--dedupe", s.dedupe, "Enumerate one canonical graph per isomorphism class");
  app.add_flag("--biadj", s.biadj, "Read graphs as 0/1 biadjacency matrices");
  app.add_option("--seed", s.seed, "Seed for randomized weights");
  app.add_option("--workers", s.workers, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_flag("--fault-inject", s.fault_inject, "Testing only: corrupt tau so checks fail");
  app.add_flag("--quiet", s.quiet, "verify: print only the summary");

  std::string file = "-";
  auto graph_verb = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Graph file ('-' for stdin)");
    return sub;
  };
  auto* tau_cmd = graph_verb("tau", "Print the number of spanning trees");
  bool all_minors = false;
  tau_cmd->add_flag("--all-minors", all_minors, "Check every principal Laplacian minor agrees");
  graph_verb("invariant", "Print the Ferrers invariant F(G) as p/q");
  graph_verb("check", "Print the full verification record");
  graph_verb("spectrum", "Print the spectral report of M");
  graph_verb("majorize", "Print the spectral report; fail unless the certificate holds");
  graph_verb("ferrers-detect", "Print whether the graph is Ferrers");
  graph_verb("corollary", "Check the weighted inequality; weights follow the graph on one line");

  std::string set_i, set_t;
  std::size_t overlap_m = 0;
  auto* overlap_cmd = app.add_subcommand("overlap", "Overlap trace and defect of two subsets");
  overlap_cmd->add_option("I", set_i, "Comma-separated indices")->required();
  overlap_cmd->add_option("T", set_t, "Comma-separated indices")->required();
  overlap_cmd->add_option("m", overlap_m, "Size of X")->required()->check(CLI::PositiveNumber);

  std::string heights;
  auto* gen_cmd = app.add_subcommand("ferrers-gen", "Emit the Ferrers graph with column heights t1,t2,...");
  gen_cmd->add_option("heights", heights, "Comma-separated weakly decreasing heights")->required();

  std::size_t dim_a = 0, dim_b = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream every connected graph with parts m, n");
  enum_cmd->add_option("m", dim_a)->required();
  enum_cmd->add_option("n", dim_b)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check for all m <= m_max, n <= n_max");
  verify_cmd->add_option("m_max", dim_a)->required();
  verify_cmd->add_option("n_max", dim_b)->required();

  if (!args.empty() && args[0].rfind("-", 0) != 0 &&
      std::find(verbs.begin(), verbs.end(), args[0]) == verbs.end()) {
    err << "error: unknown verb '" << args[0] << "'\n";
    return kInputError;
  }

  std::vector<std::string> storage{"ferrers"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();

  auto load_graph_stream = [&](std::istream*& src, std::ifstream& fin) {
    if (file == "-") {
      src = &in;
    } else {
      fin.open(file);
      if (!fin) throw input_error("cannot open '" + file + "'");
      src = &fin;
    }
  };

  try {
    std::ifstream fin;
    std::istream* src = nullptr;

    if (verb == "overlap") {
      const VertexSet I = detail::parse_set(set_i), T = detail::parse_set(set_t);
      const Rational trace = overlap_trace(I, T, overlap_m, /*verify=*/overlap_m <= 64);
      json j{{"intersection", (I & T).size()},
             {"trace", to_string(trace)},
             {"defect", to_string(overlap_defect(I, T))}};
      detail::emit(out, j, s.format);
      return kOk;
    }
    if (verb == "ferrers-gen") {
      PartitionSpec p{detail::parse_index_list(heights, "height list")};
      const BipartiteGraph g = ferrers_from_partition(p);
      out << (s.biadj ? to_biadj_text(g) : to_text(g));
      return kOk;
    }
    if (verb == "enumerate") {
      EnumerationOptions eo{s.cap, s.dedupe};
      bool header = false;
      for_each_connected(
          dim_a, dim_b,
          [&](const BipartiteGraph& g) {
            switch (s.format) {
              case Format::json:
                out << json{{"m", g.m()}, {"n", g.n()}, {"graph", to_text(g)}}.dump() << '\n';
                break;
              case Format::plain:
                out << to_text(g) << '\n';
                break;
              case Format::csv: {
                if (!header) out << "m,n,neighborhoods\n";
                header = true;
                std::string cells;
                for (std::size_t j = 0; j < g.n(); ++j) {
                  if (j) cells += ';';
                  const auto mem = g.neighborhood(j).members();
                  for (std::size_t k = 0; k < mem.size(); ++k)
                    cells += (k ? " " : "") + std::to_string(mem[k]);
                }
                out << g.m() << ',' << g.n() << ',' << cells << '\n';
                break;
              }
            }
          },
          eo);
      return kOk;
    }
    if (verb == "verify") {
      VerifyOptions vo;
      vo.tol = s.tol;
      vo.cap = s.cap;
      vo.workers = s.workers;
      vo.fault_inject = s.fault_inject;
      bool header = false;
      if (!s.quiet)
        vo.sink = [&](const VerificationRecord& r) {
          const json j = to_json(r);
          if (s.format == Format::csv) {
            std::string csv = to_csv(j);
            if (header) csv.erase(0, csv.find('\n') + 1);
            header = true;
            out << csv;
          } else if (s.format == Format::plain) {
            out << to_plain(j) << '\n';
          } else {
            out << j.dump() << '\n';
          }
        };
      try {
        const CampaignSummary summary = verify_range(dim_a, dim_b, vo);
        detail::emit(out, to_json(summary), s.format);
      } catch (const identity_violation& e) {
        err << "error: theorem check failed: " << e.what() << '\n';
        return kCheckFailed;
      }
      return kOk;
    }

    load_graph_stream(src, fin);
    const BipartiteGraph g = read_graph(*src, s.biadj);

    if (verb == "tau") {
      out << tau_matrix_tree(g, all_minors).get_str() << '\n';
      return kOk;
    }
    if (verb == "invariant") {
      out << to_string(ferrers_invariant(g)) << '\n';
      return kOk;
    }
    if (verb == "ferrers-detect") {
      out << (is_ferrers(g) ? "true" : "false") << '\n';
      return kOk;
    }
    if (verb == "check") {
      VerifyOptions vo;
      vo.tol = s.tol;
      vo.fault_inject = s.fault_inject;
      const VerificationRecord r = verify_graph(g, vo);
      detail::emit(out, to_json(r), s.format);
      if (r.violation()) {
        err << "error: theorem check failed: " << describe_violation(r) << '\n';
        return kCheckFailed;
      }
      return kOk;
    }
    if (verb == "spectrum" || verb == "majorize") {
      const SpectralReport r = spectral_report(g, s.tol);
      detail::emit(out, to_json(r), s.format);
      if (verb == "majorize" && !r.holds()) {
        err << "error: theorem check failed: majorization certificate does not hold\n";
        return kCheckFailed;
      }
      return kOk;
    }
    if (verb == "corollary") {
      std::vector<Rational> z;
      std::string line;
      while (z.empty() && std::getline(*src, line)) {
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) z.push_back(parse_rational(tok));
      }
      if (z.empty()) {
        if (app.get_option("--seed")->count() == 0)
          throw format_error("corollary needs a weight line after the graph (or --seed)");
        z = detail::random_weights(g.m() + g.n(), s.seed);
      }
      CorollaryResult r = corollary_sides(g, z, s.cap);
      if (s.fault_inject) r.lhs = r.rhs + 1;
      std::vector<std::string> zs;
      for (const auto& w : z) zs.push_back(to_string(w));
      json j{{"weights", zs},
             {"P", to_string(r.polynomial)},
             {"lhs", to_string(r.lhs)},
             {"rhs", to_string(r.rhs)},
             {"holds", r.holds()}};
      detail::emit(out, j, s.format);
      if (!r.holds()) {
        err << "error: theorem check failed: weighted inequality does not hold\n";
        return kCheckFailed;
      }
      return kOk;
    }
    err << "error: unknown verb '" << verb << "'\n";
    return kInputError;
  } catch (const cap_exceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
    return kInputError;
  } catch (const format_error& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kInputError;
  } catch (const input_error& e) {
    err << "error: invalid input: " << e.what() << '\n';
    return kInputError;
  } catch (const identity_violation& e) {
    err << "error: theorem check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const error& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace ferrers::cli
