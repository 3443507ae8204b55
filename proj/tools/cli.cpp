#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddcycle/analysis.hpp"
#include "oddcycle/certify.hpp"
#include "oddcycle/colouring.hpp"
#include "oddcycle/lemmas.hpp"
#include "oddcycle/pipeline.hpp"

namespace oddcycle::cli {

namespace {

using nlohmann::json;

void write_certificate(const OddCycleCertificate& cert, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << "cycle " << cert.colour.value_or(0);
  for (Vertex v : cert.vertices) f << ' ' << v;
  f << '\n';
}

OddCycleCertificate read_certificate(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::string line, word;
  std::getline(f, line);
  std::istringstream in(line);
  if (!(in >> word) || word != "cycle") throw ParseError(1, "certificate must start with 'cycle'");
  long long colour;
  if (!(in >> colour) || colour < 0) throw ParseError(1, "missing colour");
  OddCycleCertificate cert;
  cert.colour = static_cast<Colour>(colour);
  while (in >> word) {
    if (word.empty() || word.size() > 9 || !std::all_of(word.begin(), word.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError(1, "bad vertex '" + word + "'");
    cert.vertices.push_back(static_cast<Vertex>(std::stoul(word)));
  }
  while (std::getline(f, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(2, "trailing content after certificate");
  return cert;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json trace_record(const TraceLevel& t) {
  json asserts = json::array();
  for (const auto& a : t.asserts) asserts.push_back({{"name", a.name}, {"holds", a.holds}});
  return {{"level", t.level},
          {"branch", to_string(t.branch)},
          {"steps", t.steps},
          {"n", t.n},
          {"q", t.q},
          {"eps", t.eps},
          {"C", t.C},
          {"formula_bound", t.formula_bound},
          {"k", opt(t.k)},
          {"small_threshold", opt(t.small_threshold)},
          {"deleted_size", opt(t.deleted_size)},
          {"small_sizes", t.small_sizes},
          {"big_counts", t.big_counts},
          {"n_prime", opt(t.n_prime)},
          {"delta", opt(t.delta)},
          {"survivors", opt(t.survivors)},
          {"colour", opt(t.colour)},
          {"bound_claimed", opt(t.bound_claimed)},
          {"cycle_length", opt(t.cycle_length)},
          {"asserts", asserts},
          {"fallback_used", t.fallback_used}};
}

void write_trace(const PipelineTrace& trace, const std::string& path) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  for (const auto& lvl : trace.levels) f << trace_record(lvl).dump() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Options {
  std::string kind, in, in2, out, cert, trace, method = "pipeline", delta = "1", k_rule, small_rule, fallback = "oracle", config;
  std::size_t q = 0, n = 0, colour = 0, k = 0, iters = 100000;
  std::uint64_t seed = 0;
  double eps = 0.5, C = 4.0;
};

int do_gen(const Options& o, std::ostream& out) {
  EdgeColouring c;
  if (o.kind == "binary") {
    c = binary_colouring(o.q);
  } else if (o.kind == "product") {
    if (o.in2.empty()) throw InputError("gen --kind product needs --in2");
    c = product_colouring(binary_colouring(o.q), load_colouring(o.in2));
  } else {
    if (o.n == 0) throw InputError("gen --kind random needs --n");
    c = random_colouring(o.n, o.q, o.seed);
  }
  save_colouring(c, o.out);
  out << "wrote K_" << c.order() << " with " << c.colours() << " colours to " << o.out << '\n';
  return kOk;
}

int do_find(const Options& o, std::ostream& out, std::ostream& err) {
  const EdgeColouring c = load_colouring(o.in);
  MonoOddCycle res;
  try {
    if (o.method == "pipeline") {
      PipelineParams p;
      p.eps = o.eps;
      p.C = o.C;
      if (!o.k_rule.empty()) p.k_of_q = SizeRule(o.k_rule);
      if (!o.small_rule.empty()) p.small_threshold_of_q = SizeRule(o.small_rule);
      p.fallback = o.fallback == "fail" ? Fallback::fail : Fallback::oracle;
      res = find_mono_odd_cycle(c, p);
    } else if (o.method == "proposition") {
      res = proposition_pipeline(c, c.colours(), Rational::parse(o.delta));
    } else {
      res = oracle_mono_odd_cycle(c);
    }
  } catch (const InternalInconsistency& e) {
    write_trace(e.trace, o.trace);
    throw;
  } catch (const RegimeFailure& e) {
    write_trace(e.trace, o.trace);
    throw;
  }
  if (!o.cert.empty()) write_certificate(res.certificate, o.cert);
  write_trace(res.trace, o.trace);
  if (auto v = verify_mono_odd_cycle(c, res.certificate)) {
    err << "produced certificate failed verification: " << v->message << '\n';
    return kViolation;
  }
  out << "cycle length " << res.certificate.length() << " colour " << *res.certificate.colour;
  if (res.bound_claimed) out << " bound " << *res.bound_claimed;
  out << '\n';
  return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const EdgeColouring c = load_colouring(o.in);
  const OddCycleCertificate cert = read_certificate(o.cert);
  if (auto v = verify_mono_odd_cycle(c, cert)) {
    out << "violation " << to_string(v->kind) << ": " << v->message << '\n';
    return kViolation;
  }
  out << "ok\n";
  return kOk;
}

int do_peel(const Options& o, std::ostream& out) {
  const EdgeColouring c = load_colouring(o.in);
  if (o.colour >= c.colours()) throw InputError("colour out of range");
  const Graph g = colour_class(c, static_cast<Colour>(o.colour));
  const PeelOutcome res = peel(g, o.k);
  if (auto v = verify_peel(g, o.k, res)) {
    out << "violation " << to_string(v->kind) << ": " << v->message << '\n';
    return kViolation;
  }
  if (const auto* sc = std::get_if<ShortCycle>(&res)) {
    out << "short-cycle length " << sc->cycle.length() << ':';
    for (Vertex v : sc->cycle.vertices) out << ' ' << v;
    out << '\n';
    return kOk;
  }
  const auto& dec = std::get<Decomposition>(res);
  std::size_t radius = 0;
  for (const auto& comp : dec.components) radius = std::max(radius, comp.radius);
  out << "decomposition deleted " << dec.deleted.size() << " components " << dec.components.size() << " max-radius " << radius << '\n';
  return kOk;
}

int do_lq_exact(const Options& o, std::ostream& out) {
  const ExhaustiveResult r = exhaustive_L(o.q, o.n);
  if (r.value) out << "L(" << o.q << "," << o.n << ") = " << *r.value << '\n';
  else out << "K_" << o.n << " admits a " << o.q << "-colouring with every colour class bipartite\n";
  out << "enumerated " << r.enumerated << '\n';
  if (!o.out.empty()) save_colouring(r.witness, o.out);
  return kOk;
}

int do_search(const Options& o, std::ostream& out) {
  const AnnealResult r = anneal_search(o.q, o.n, o.iters, o.seed);
  if (r.objective > o.n) out << "objective none (all colour classes bipartite)\n";
  else out << "objective " << r.objective << '\n';
  if (!o.out.empty()) save_colouring(r.colouring, o.out);
  return kOk;
}

int do_table(const Options& o, std::ostream& out) {
  const ExperimentConfig cfg = ExperimentConfig::parse(read_file(o.config));
  const std::string csv = experiment_table(cfg);
  if (o.out.empty()) {
    out << csv;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << csv;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic odd cycles in edge colourings of complete graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a colouring");
  gen->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"binary", "product", "random"}));
  gen->add_option("--q", o.q)->required();
  gen->add_option("--n", o.n);
  gen->add_option("--seed", o.seed);
  gen->add_option("--in2", o.in2);
  gen->add_option("--out", o.out)->required();

  auto* find = app.add_subcommand("find", "find a monochromatic odd cycle");
  find->add_option("--in", o.in)->required();
  find->add_option("--method", o.method)->check(CLI::IsMember({"pipeline", "proposition", "oracle"}));
  find->add_option("--eps", o.eps);
  find->add_option("--C", o.C);
  find->add_option("--delta", o.delta);
  find->add_option("--k-rule", o.k_rule);
  find->add_option("--small-rule", o.small_rule);
  find->add_option("--fallback", o.fallback)->check(CLI::IsMember({"oracle", "fail"}));
  find->add_option("--out-cert", o.cert);
  find->add_option("--trace", o.trace);

  auto* verify = app.add_subcommand("verify", "check a cycle certificate");
  verify->add_option("--in", o.in)->required();
  verify->add_option("--cert", o.cert)->required();

  auto* peel_cmd = app.add_subcommand("peel", "peel one colour class");
  peel_cmd->add_option("--in", o.in)->required();
  peel_cmd->add_option("--colour", o.colour)->required();
  peel_cmd->add_option("--k", o.k)->required();

  auto* lq = app.add_subcommand("lq-exact", "exact L(q,n) by enumeration");
  lq->add_option("--q", o.q)->required();
  lq->add_option("--n", o.n)->required();
  lq->add_option("--out", o.out, "witness colouring");

  auto* search = app.add_subcommand("search", "annealing search for long shortest odd cycles");
  search->add_option("--q", o.q)->required();
  search->add_option("--n", o.n)->required();
  search->add_option("--iters", o.iters);
  search->add_option("--seed", o.seed);
  search->add_option("--out", o.out);

  auto* table = app.add_subcommand("table", "run an experiment grid");
  table->add_option("--config", o.config)->required();
  table->add_option("--out", o.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (gen->parsed()) return do_gen(o, out);
    if (find->parsed()) return do_find(o, out, err);
    if (verify->parsed()) return do_verify(o, out);
    if (peel_cmd->parsed()) return do_peel(o, out);
    if (lq->parsed()) return do_lq_exact(o, out);
    if (search->parsed()) return do_search(o, out);
    if (table->parsed()) return do_table(o, out);
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kInconsistency;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const RegimeFailure& e) {
    err << "regime failure: " << e.what() << '\n';
    return kInputError;
  } catch (const RetryExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace oddcycle::cli
