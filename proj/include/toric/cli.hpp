#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/ideal.hpp"
#include "toric/pi_complex.hpp"
#include "toric/value_set.hpp"
#include "toric/walks.hpp"

namespace toric::cli {

using Json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { bound, gens, connect, verify, oracle };
enum class Format { json, csv, text };

struct CommandRequest {
  Command command = Command::bound;
  std::vector<Int> a;
  std::optional<Int> q;
  std::optional<Int> c;
  std::optional<Int> x;
  std::optional<Int> y;
  Int extra = 2;
  Format format = Format::text;
  std::string out_path;
};

namespace detail {

inline std::vector<Int> parse_value_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw usage_error("--a expects comma-separated integers, got '" + token + "'");
    }
  }
  if (out.size() < 2) throw usage_error("--a needs at least two values");
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] <= out[i - 1]) throw usage_error("--a must be strictly increasing");
  return out;
}

inline Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw usage_error("unknown format '" + text + "'");
}

}  // namespace detail

inline CommandRequest parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"toric ideal degree-bound toolkit"};
  app.require_subcommand(1);

  std::string a_text;
  std::string format_text = "text";
  CommandRequest req;

  struct SubSpec {
    CLI::App* sub;
    Command command;
  };
  std::vector<SubSpec> subs;
  auto add_sub = [&](const char* name, const char* desc, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--a", a_text, "comma-separated strictly increasing exponents")->required();
    sub->add_option("--format", format_text, "json, csv or text");
    sub->add_option("--out", req.out_path, "duplicate stdout to this file");
    subs.push_back({sub, cmd});
    return sub;
  };

  add_sub("bound", "degree bound r+s of the normalized exponent set", Command::bound);
  add_sub("gens", "bidegrees and representatives of minimal generators", Command::gens);
  CLI::App* connect_sub = add_sub("connect", "connectivity certificate between two vertices",
                                  Command::connect);
  CLI::App* verify_sub = add_sub("verify", "connectivity sweep above the bound", Command::verify);
  CLI::App* oracle_sub = add_sub("oracle", "exact-rank generator count for one bidegree",
                                 Command::oracle);

  Int q = 0, c = 0, x = 0, y = 0;
  connect_sub->add_option("--q", q, "cardinality")->required();
  connect_sub->add_option("--c", c, "sum")->required();
  connect_sub->add_option("--x", x, "first vertex")->required();
  connect_sub->add_option("--y", y, "second vertex")->required();
  oracle_sub->add_option("--q", q, "cardinality")->required();
  oracle_sub->add_option("--c", c, "sum")->required();
  verify_sub->add_option("--extra", req.extra, "how far above the bound to sweep");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  for (const SubSpec& spec : subs)
    if (spec.sub->parsed()) req.command = spec.command;
  req.a = detail::parse_value_list(a_text);
  req.format = detail::parse_format(format_text);
  if (req.format == Format::csv && req.command != Command::gens)
    throw usage_error("csv output is only available for gens");
  if (req.extra < 0) throw usage_error("--extra must be non-negative");
  if (req.command == Command::connect) {
    req.q = q;
    req.c = c;
    req.x = x;
    req.y = y;
  }
  if (req.command == Command::oracle) {
    req.q = q;
    req.c = c;
  }
  return req;
}

struct RunOutcome {
  std::string output;
  int exit_code = 0;
};

namespace detail {

inline Json multiset_json(const Multiset& m) { return Json(m.items()); }

inline Json binomial_json(const Binomial& b, const ValueSet& v) {
  Json j;
  j["plus"] = multiset_json(b.plus);
  j["minus"] = multiset_json(b.minus);
  j["text"] = render_binomial(b, v);
  return j;
}

inline RunOutcome run_bound(const ValueSet& v, Format format) {
  const NormalizedValueSet norm = normalize(v);
  if (norm.values.size() == 2) {
    if (format == Format::json) {
      Json j;
      j["bound"] = 0;
      j["zero_ideal"] = true;
      j["normalized_a"] = norm.values.elements();
      return {j.dump(2) + "\n", 0};
    }
    return {"zero ideal; bound=0\n", 0};
  }
  const GapProfile gp = gap_profile(norm.values);
  const Int bound = checked_add(gp.r, gp.s);
  if (format == Format::json) {
    Json j;
    j["r"] = gp.r;
    j["s"] = gp.s;
    j["bound"] = bound;
    j["normalized_a"] = norm.values.elements();
    return {j.dump(2) + "\n", 0};
  }
  std::ostringstream os;
  os << "r=" << gp.r << " s=" << gp.s << " bound=" << bound << "\n";
  return {os.str(), 0};
}

inline RunOutcome run_gens(const ValueSet& v, Format format) {
  const GeneratorReport report = generator_bidegrees(v);
  if (format == Format::json) {
    Json j;
    j["bound"] = report.bound;
    j["zero_ideal"] = report.zero_ideal;
    j["entries"] = Json::array();
    for (const GeneratorEntry& e : report.entries) {
      Json entry;
      entry["q"] = e.q;
      entry["c"] = e.c;
      entry["k"] = e.component_count;
      entry["count"] = e.generator_count;
      entry["binomials"] = Json::array();
      for (const Binomial& b : e.binomials) entry["binomials"].push_back(binomial_json(b, v));
      j["entries"].push_back(std::move(entry));
    }
    return {j.dump(2) + "\n", 0};
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "q,c,k,count,binomial_text\n";
    for (const GeneratorEntry& e : report.entries)
      for (const Binomial& b : e.binomials)
        os << e.q << "," << e.c << "," << e.component_count << "," << e.generator_count << ","
           << render_binomial(b, v) << "\n";
    return {os.str(), 0};
  }
  os << "bound=" << report.bound << "\n";
  if (report.zero_ideal) os << "zero ideal\n";
  for (const GeneratorEntry& e : report.entries) {
    os << "q=" << e.q << " c=" << e.c << " k=" << e.component_count
       << " count=" << e.generator_count << ":";
    for (const Binomial& b : e.binomials) os << " " << render_binomial(b, v) << ";";
    os << "\n";
  }
  return {os.str(), 0};
}

inline RunOutcome run_connect(const ValueSet& v, const CommandRequest& req, Format format) {
  const WalkCertificate cert = connect(v, *req.q, *req.c, *req.x, *req.y);
  if (format == Format::json) {
    Json j;
    j["q"] = cert.degree.q;
    j["c"] = cert.degree.c;
    j["x"] = cert.x;
    j["y"] = cert.y;
    j["chain"] = Json::array();
    for (const Multiset& m : cert.chain) j["chain"].push_back(multiset_json(m));
    return {j.dump(2) + "\n", 0};
  }
  std::ostringstream os;
  for (const Multiset& m : cert.chain) {
    os << "{";
    for (std::size_t i = 0; i < m.items().size(); ++i) {
      if (i) os << ",";
      os << m.items()[i];
    }
    os << "}\n";
  }
  return {os.str(), 0};
}

inline RunOutcome run_verify(const ValueSet& v, Int extra, Format format) {
  const TheoremCheck check = verify_main_theorem(v, extra);
  if (format == Format::json) {
    Json j;
    j["pass"] = check.pass;
    j["cells"] = check.cells_checked;
    if (check.counterexample) {
      j["counterexample"]["q"] = check.counterexample->first;
      j["counterexample"]["c"] = check.counterexample->second;
    }
    return {j.dump(2) + "\n", check.pass ? 0 : 1};
  }
  std::ostringstream os;
  if (check.pass)
    os << "pass\n";
  else
    os << "fail at q=" << check.counterexample->first << " c=" << check.counterexample->second
       << "\n";
  return {os.str(), check.pass ? 0 : 1};
}

inline RunOutcome run_oracle(const ValueSet& v, const CommandRequest& req, Format format) {
  const RankResult rr = rank_oracle(v, *req.q, *req.c);
  if (format == Format::json) {
    Json j;
    j["q"] = *req.q;
    j["c"] = *req.c;
    j["dim_I"] = rr.dim_ideal;
    j["dim_I_less"] = rr.dim_lower;
    j["min_gen_count"] = rr.min_gen_count;
    return {j.dump(2) + "\n", 0};
  }
  std::ostringstream os;
  os << "dim_I=" << rr.dim_ideal << " dim_I_less=" << rr.dim_lower
     << " min_gen_count=" << rr.min_gen_count << "\n";
  return {os.str(), 0};
}

}  // namespace detail

inline RunOutcome run(const CommandRequest& req) {
  try {
    const ValueSet v(req.a);
    switch (req.command) {
      case Command::bound:
        return detail::run_bound(v, req.format);
      case Command::gens:
        return detail::run_gens(v, req.format);
      case Command::connect:
        return detail::run_connect(v, req, req.format);
      case Command::verify:
        return detail::run_verify(v, req.extra, req.format);
      case Command::oracle:
        return detail::run_oracle(v, req, req.format);
    }
    throw std::logic_error("unreachable");
  } catch (const std::exception& e) {
    Json j;
    j["error"] = e.what();
    return {j.dump(2) + "\n", 1};
  }
}

}  // namespace toric::cli
