#include "leavitt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "leavitt/error.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/ideal_tools.hpp"
#include "leavitt/invariants.hpp"
#include "leavitt/io.hpp"
#include "leavitt/sampling.hpp"

namespace leavitt {

namespace {

using nlohmann::json;

enum class Format { kText, kJson };

struct RunConfig {
  std::string graph_file;
  std::string field = "rationals";
  std::string format;  // empty: subcommand default
  std::uint64_t seed = kDefaultSeed;
  std::string expr, lhs, rhs, certificate_file;
  std::size_t trials = 50;
};

Field parse_field(const std::string& text) {
  if (text == "rationals") return Field::rationals();
  const std::string prefix = "prime:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(Errc::kInvalidInput, "bad field selector '" + text + "'");
    return Field::prime(std::stoull(digits));
  }
  throw Error(Errc::kInvalidInput, "bad field selector '" + text + "' (expected rationals or prime:<p>)");
}

Format resolve_format(const RunConfig& cfg, Format fallback) {
  if (cfg.format.empty()) return fallback;
  return cfg.format == "json" ? Format::kJson : Format::kText;
}

json element_json(const SkewRing& ring, const SkewElement& x) { return ring.to_string(x); }

void print_chain(const SkewRing& ring, const CertificateChain& chain, std::ostream& out, const char* indent) {
  out << indent << "source: " << ring.to_string(chain.source) << '\n';
  for (const auto& step : chain.steps)
    out << indent << (step.side == Side::kLeft ? "L " : "R ") << ring.to_string(step.multiplier) << '\n';
}

void print_certificate(const SkewRing& ring, const Certificate& cert, std::ostream& out) {
  if (cert.chains.size() == 1) {
    print_chain(ring, cert.chains.front(), out, "");
  } else {
    for (std::size_t i = 0; i < cert.chains.size(); ++i) {
      out << "term " << i + 1 << ":\n";
      print_chain(ring, cert.chains[i], out, "  ");
    }
  }
  out << "result: " << ring.to_string(cert.claimed_result) << '\n';
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void load() {
    graph_ = std::make_shared<const Graph>(load_graph(cfg_.graph_file));
    field_ = parse_field(cfg_.field);
    ring_.emplace(graph_, field_);
  }

  SkewElement phi_of(const std::string& text) const {
    return phi_embed(*ring_, parse_expression(text, *graph_, field_));
  }

  int analyze() {
    SimplicityReport report = simplicity_report(*graph_);
    if (resolve_format(cfg_, Format::kJson) == Format::kJson) {
      out_ << report_to_json(*graph_, report).dump(2) << '\n';
      return 0;
    }
    out_ << "condition_L: " << (report.condition_L.holds ? "holds" : "fails");
    if (report.condition_L.exitless_cycle)
      out_ << " (exitless cycle: " << graph_->to_string(*report.condition_L.exitless_cycle) << ')';
    out_ << "\nhs_subsets:";
    for (const auto& set : report.hs_subsets) {
      out_ << " {";
      for (std::size_t i = 0; i < set.size(); ++i) out_ << (i ? "," : "") << graph_->name(set[i]);
      out_ << '}';
    }
    out_ << "\ncriteria_met: " << (report.criteria_met ? "true" : "false") << '\n';
    return 0;
  }

  int phi() {
    SkewElement x = phi_of(cfg_.expr);
    emit_element(cfg_.expr, x);
    return 0;
  }

  int mul() {
    SkewElement x = ring_->mul(phi_of(cfg_.lhs), phi_of(cfg_.rhs));
    emit_element("(" + cfg_.lhs + ")(" + cfg_.rhs + ")", x);
    return 0;
  }

  int normal_form() {
    SkewElement x = phi_of(cfg_.expr);
    auto parts = ring_->grade_decompose(x);
    if (resolve_format(cfg_, Format::kText) == Format::kJson) {
      json comps = json::array();
      for (const auto& [z, part] : parts) comps.push_back({{"grade", z}, {"element", element_json(*ring_, part)}});
      out_ << json{{"element", element_json(*ring_, x)}, {"components", comps}}.dump(2) << '\n';
      return 0;
    }
    out_ << ring_->to_string(x) << '\n';
    for (const auto& [z, part] : parts) out_ << "grade " << z << ": " << ring_->to_string(part) << '\n';
    return 0;
  }

  int reduce() {
    VertexProjection vp = extract_vertex_projection(*ring_, phi_of(cfg_.expr));
    if (resolve_format(cfg_, Format::kJson) == Format::kJson) {
      out_ << certificate_to_json(*ring_, vp.certificate).dump(2) << '\n';
      return 0;
    }
    print_certificate(*ring_, vp.certificate, out_);
    return 0;
  }

  int verify() {
    std::ifstream in(cfg_.certificate_file);
    if (!in) throw Error(Errc::kInvalidInput, "cannot open '" + cfg_.certificate_file + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw Error(Errc::kSyntaxError, cfg_.certificate_file + ": " + e.what());
    }
    // Either a bare certificate or a demo-simplicity report.
    std::vector<std::pair<std::string, json>> certs;
    if (j.is_object() && j.contains("vertices")) {
      for (const auto& [id, c] : j.at("vertices").items()) certs.emplace_back(id, c);
    } else {
      certs.emplace_back("", j);
    }
    bool all_ok = true;
    for (const auto& [label, c] : certs) {
      bool ok = verify_certificate(*ring_, certificate_from_json(*ring_, c));
      all_ok = all_ok && ok;
      out_ << (label.empty() ? "" : label + ": ") << (ok ? "verified" : "REJECTED") << '\n';
    }
    if (!all_ok) throw Error(Errc::kInvalidInput, "certificate does not verify");
    return 0;
  }

  int dimension() {
    std::size_t n = acyclic_dimension(*ring_);
    if (resolve_format(cfg_, Format::kText) == Format::kJson)
      out_ << json{{"dimension", n}}.dump(2) << '\n';
    else
      out_ << n << '\n';
    return 0;
  }

  int check() {
    InvariantOptions opts;
    opts.seed = cfg_.seed;
    opts.trials = cfg_.trials;
    auto results = run_invariant_suite(*ring_, opts);
    bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (resolve_format(cfg_, Format::kJson) == Format::kJson) {
      json rows = json::array();
      for (const auto& r : results) {
        json row = {{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}};
        if (!r.passed) row["detail"] = r.detail;
        rows.push_back(row);
      }
      out_ << json{{"seed", cfg_.seed}, {"field", field_.to_string()}, {"results", rows}, {"passed", all}}.dump(2)
           << '\n';
    } else {
      for (const auto& r : results) {
        out_ << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) out_ << ": " << r.detail;
        out_ << '\n';
      }
    }
    if (!all) throw Error(Errc::kInternal, "invariant suite failed");
    return 0;
  }

  int demo_simplicity() {
    SimplicityDemonstration demo = demonstrate_simplicity(*ring_, phi_of(cfg_.expr));
    if (resolve_format(cfg_, Format::kJson) == Format::kJson) {
      json vertices = json::object();
      for (const auto& [v, cert] : demo.vertex_certificates)
        vertices[graph_->name(v)] = certificate_to_json(*ring_, cert);
      json spanning = json::array();
      for (const auto& rec : demo.spanning)
        spanning.push_back({{"p", to_string(*graph_, rec.p)},
                            {"q", to_string(*graph_, rec.q)},
                            {"vertex", graph_->name(rec.vertex)},
                            {"element", element_json(*ring_, rec.element)},
                            {"verified", rec.verified}});
      out_ << json{{"vertices", vertices}, {"spanning", spanning}}.dump(2) << '\n';
      return 0;
    }
    for (const auto& [v, cert] : demo.vertex_certificates) {
      out_ << "vertex " << graph_->name(v) << ":\n";
      print_certificate(*ring_, cert, out_);
    }
    std::size_t verified = std::count_if(demo.spanning.begin(), demo.spanning.end(),
                                         [](const auto& r) { return r.verified; });
    out_ << "spanning: " << verified << '/' << demo.spanning.size() << " verified\n";
    return 0;
  }

 private:
  void emit_element(const std::string& source, const SkewElement& x) {
    if (resolve_format(cfg_, Format::kText) == Format::kJson)
      out_ << json{{"expr", source}, {"element", element_json(*ring_, x)}}.dump(2) << '\n';
    else
      out_ << ring_->to_string(x) << '\n';
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::shared_ptr<const Graph> graph_;
  Field field_;
  std::optional<SkewRing> ring_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computation in Leavitt path algebras of finite graphs", "leavitt"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--field", cfg.field, "Scalar field: rationals or prime:<p>");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for the property suites");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("graph", cfg.graph_file, "Graph JSON file")->required();
    return sub;
  };
  CLI::App* analyze = add("analyze", "Condition (L), hereditary saturated subsets, simplicity verdict");
  CLI::App* phi = add("phi", "Image of an expression in the skew group ring");
  phi->add_option("--expr", cfg.expr, "Expression over v, e, e*")->required();
  CLI::App* mul = add("mul", "Product of two expressions");
  mul->add_option("--lhs", cfg.lhs)->required();
  mul->add_option("--rhs", cfg.rhs)->required();
  CLI::App* normal_form = add("normal-form", "Canonical form and grade decomposition");
  normal_form->add_option("--expr", cfg.expr)->required();
  CLI::App* reduce = add("reduce", "Certificate reducing an element to a vertex projection");
  reduce->add_option("--expr", cfg.expr)->required();
  CLI::App* verify = add("verify", "Replay certificates produced by reduce or demo-simplicity");
  verify->add_option("--certificate", cfg.certificate_file)->required();
  CLI::App* dimension = add("dimension", "Dimension of the algebra of an acyclic graph");
  CLI::App* check = add("check", "Run the invariant suite");
  check->add_option("--trials", cfg.trials, "Random trials per property");
  CLI::App* demo = add("demo-simplicity", "Certificates that an element generates the whole algebra");
  demo->add_option("--expr", cfg.expr)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Runner runner(cfg, out);
  try {
    runner.load();
    if (*analyze) return runner.analyze();
    if (*phi) return runner.phi();
    if (*mul) return runner.mul();
    if (*normal_form) return runner.normal_form();
    if (*reduce) return runner.reduce();
    if (*verify) return runner.verify();
    if (*dimension) return runner.dimension();
    if (*check) return runner.check();
    if (*demo) return runner.demo_simplicity();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace leavitt
