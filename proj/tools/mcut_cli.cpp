#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "mcut/mcut.hpp"

namespace {

using namespace mcut;

// Usage-level failure: reported on stderr with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_text(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Kind to_kind(const std::string& s) {
  auto k = parse_kind(s);
  if (!k) throw UsageError("unknown kind '" + s + "' (all, minimal, maximal)");
  return *k;
}

Method to_method(const std::string& s) {
  auto m = parse_method(s);
  if (!m) throw UsageError("unknown method '" + s + "' (oracle, spanning-tree, vc, tc, nd, mw, fen, cp)");
  return *m;
}

struct Common {
  std::string graph;
  std::string kind = "all";
  std::string method = "spanning-tree";
  std::string partition;  // clique partition for cp
  std::string modules;    // modular partition for mw
};

Certificates load_certificates(const Common& c, const Graph& g, Method m) {
  Certificates certs;
  try {
    if (!c.partition.empty()) certs.clique_partition = parse_partition(read_text(c.partition), g.n());
    if (!c.modules.empty()) certs.modular_partition = parse_partition(read_text(c.modules), g.n());
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (m == Method::Cp && !certs.clique_partition) throw UsageError("method cp needs --partition");
  return certs;
}

void add_common(CLI::App* sub, Common& c, bool with_method, bool with_kind) {
  if (with_kind) sub->add_option("--kind", c.kind, "all, minimal or maximal")->capture_default_str();
  if (with_method)
    sub->add_option("--method", c.method, "oracle, spanning-tree, vc, tc, nd, mw, fen or cp")->capture_default_str();
  sub->add_option("--partition", c.partition, "clique partition file (cp)");
  sub->add_option("--modules", c.modules, "modular partition file (mw)");
  sub->add_option("graph", c.graph, "graph file, or - for stdin")->required();
}

int run_enum(const Common& c) {
  const Graph g = load_graph(c.graph);
  const Method m = to_method(c.method);
  const Kind kind = to_kind(c.kind);
  const Certificates certs = load_certificates(c, g, m);
  if (is_kernel_method(m) && !method_supports(m, kind))
    throw UsageError(std::string(method_name(m)) + " has no kernel for " + c.kind + " cuts");
  write_cuts(std::cout, enumerate_with(g, m, kind, certs));
  return 0;
}

int run_count(const Common& c) {
  const Graph g = load_graph(c.graph);
  const Method m = to_method(c.method);
  const Kind kind = to_kind(c.kind);
  const Certificates certs = load_certificates(c, g, m);
  if (is_kernel_method(m) && !method_supports(m, kind))
    throw UsageError(std::string(method_name(m)) + " has no kernel for " + c.kind + " cuts");
  std::uint64_t count = 0;
  if (m == Method::SpanningTree) {
    count = count_mc(g, kind);
  } else {
    for (const Cut& cut : enumerate_with(g, m, kind, certs)) {
      (void)cut;
      ++count;
    }
  }
  std::cout << count << '\n';
  return 0;
}

int run_kernelize(const Common& c, const std::string& out) {
  const Graph g = load_graph(c.graph);
  const Method m = to_method(c.method);
  const Kind kind = to_kind(c.kind);
  if (!is_kernel_method(m)) throw UsageError("kernelize needs a kernel method");
  if (!method_supports(m, kind)) throw UsageError(std::string(method_name(m)) + " has no kernel for " + c.kind + " cuts");
  const KernelRun r = run_kernel(g, m, kind, load_certificates(c, g, m));
  std::ostringstream text;
  text << "# method " << method_name(m) << " kind " << kind_name(kind) << '\n';
  text << "# parameter " << r.parameter << '\n';
  text << "# host " << g.n() << " vertices, kernel " << r.h.n() << " vertices, bound " << r.bound << " ("
       << (r.within_bound ? "within" : "exceeded") << ")\n";
  text << "# kernel-to-host";
  for (Vertex v : r.to_host) text << ' ' << v;
  text << '\n' << format_graph(r.h);
  write_text(out, text.str());
  return 0;
}

int run_verify(const Common& c) {
  const Graph g = load_graph(c.graph);
  const Method m = to_method(c.method);
  const Kind kind = to_kind(c.kind);
  if (!is_kernel_method(m)) throw UsageError("verify needs a kernel method");
  if (!method_supports(m, kind)) throw UsageError(std::string(method_name(m)) + " has no kernel for " + c.kind + " cuts");
  const VerifyReport r = verify_method(g, m, kind, load_certificates(c, g, m), c.graph);
  std::cout << report_header() << '\n' << report_line(r) << '\n';
  return r.pass() ? 0 : 1;
}

struct GenOptions {
  std::string family;
  int n = 0, k = 0, l = 0, p = 0;
  std::uint64_t seed = 0;
  std::string out, certificate;
};

int run_gen(const GenOptions& o) {
  auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  GeneratedInstance inst;
  try {
    inst = generate({*f, o.n, o.k, o.l, o.p, o.seed});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_text(o.out, format_graph(inst.graph));
  if (!o.certificate.empty()) {
    if (inst.clique_partition) {
      write_text(o.certificate, format_partition(*inst.clique_partition));
    } else if (inst.modular_partition) {
      write_text(o.certificate, format_partition(*inst.modular_partition));
    } else if (inst.feedback_edges) {
      std::string text;
      for (const Edge& e : *inst.feedback_edges) text += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
      write_text(o.certificate, text);
    } else {
      throw UsageError("family " + o.family + " has no certificate");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching cut enumeration with kernels"};
  app.require_subcommand(1);

  Common enum_opts, count_opts, kern_opts, verify_opts;
  std::string kern_out;
  GenOptions gen;

  auto* e = app.add_subcommand("enum", "list matching cuts, one per line");
  add_common(e, enum_opts, true, true);
  auto* c = app.add_subcommand("count", "count matching cuts");
  add_common(c, count_opts, true, true);
  auto* k = app.add_subcommand("kernelize", "write the kernel graph with a summary");
  kern_opts.method = "vc";
  add_common(k, kern_opts, true, true);
  k->add_option("--out", kern_out, "output file (default stdout)");
  auto* v = app.add_subcommand("verify", "check the kernel contract against the oracle");
  verify_opts.method = "vc";
  add_common(v, verify_opts, true, true);
  auto* g = app.add_subcommand("gen", "generate a graph family");
  g->add_option("--family", gen.family, "family name")->required();
  g->add_option("--k", gen.k, "family parameter k");
  g->add_option("--n", gen.n, "vertex count");
  g->add_option("--l", gen.l, "path length (hkl_fen)");
  g->add_option("--p", gen.p, "leaves per star (star_forest)");
  g->add_option("--seed", gen.seed, "random seed");
  g->add_option("--out", gen.out, "graph output file (default stdout)");
  g->add_option("--certificate", gen.certificate, "write the planted partition or feedback edges here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*e) return run_enum(enum_opts);
    if (*c) return run_count(count_opts);
    if (*k) return run_kernelize(kern_opts, kern_out);
    if (*v) return run_verify(verify_opts);
    if (*g) return run_gen(gen);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  } catch (const std::length_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
