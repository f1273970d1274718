#pragma once

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osgm/aomoto.hpp"
#include "osgm/arrangement.hpp"
#include "osgm/error.hpp"
#include "osgm/gauss_manin.hpp"
#include "osgm/io.hpp"
#include "osgm/orlik_solomon.hpp"

namespace osgm::cli {

enum ExitCode : int { ok = 0, validation_failure = 2, precondition_failure = 3 };

struct RunConfig {
  std::vector<std::string> inputs;
  std::optional<int> degree;
  std::string weights_text;
  std::string weights_file;
  std::vector<std::string> pencil;
  int depth = 1;
  bool json = false;
};

struct PencilSpec {
  Subset s;
  int r = 0;
};

inline PencilSpec parse_pencil(const std::vector<std::string>& args) {
  if (args.size() != 2) throw ValidationError("--pencil expects a set and a rank, e.g. --pencil \"3,4,5\" 1");
  std::vector<int> elements;
  std::stringstream ss(args[0]);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      elements.push_back(v);
    } catch (const std::logic_error&) {
      throw ValidationError("--pencil: bad index '" + item + "'");
    }
  }
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(args[1], &used);
    if (used != args[1].size()) throw std::invalid_argument(args[1]);
  } catch (const std::logic_error&) {
    throw ValidationError("--pencil: bad rank '" + args[1] + "'");
  }
  for (int e : elements) {
    if (e < 1 || e > 31) throw ValidationError("--pencil: index " + std::to_string(e) + " out of range");
  }
  return {Subset::from_elements(elements), r};
}

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int deps(const RunConfig& c) {
    auto type = load_type(c, 1);
    std::vector<int> sizes = degrees_or(c, 2, type.n() + 1, "size");
    io::json records = io::json::array();
    for (int q : sizes) {
      auto dep = type.dependent_subsets(q);
      auto star = type.dep_star(q);
      if (c.json) {
        records.push_back({{"size", q}, {"dep", sets_json(dep)}, {"dep_star", sets_json(star)}});
      } else {
        out_ << "q=" << q << "  Dep: " << sets_text(dep) << "  Dep*: " << sets_text(star) << "\n";
      }
    }
    if (c.json) out_ << io::json{{"n", type.n()}, {"ell", type.ell()}, {"dependent", records}}.dump(2) << "\n";
    return ok;
  }

  int betti(const RunConfig& c) {
    auto algebra = load_algebra(c);
    std::vector<std::size_t> b;
    for (int q = 0; q <= algebra->ell(); ++q) b.push_back(algebra->betti(q));
    if (c.json) {
      out_ << io::json{{"betti", b}, {"euler_characteristic", algebra->euler_characteristic()}}.dump(2) << "\n";
    } else {
      for (std::size_t q = 0; q < b.size(); ++q) out_ << "b" << q << " = " << b[q] << "\n";
      out_ << "chi = " << algebra->euler_characteristic() << "\n";
    }
    return ok;
  }

  int nbc(const RunConfig& c) {
    auto algebra = load_algebra(c);
    auto degrees = degrees_or(c, 0, algebra->ell(), "degree");
    if (c.json) {
      io::json bases = io::json::array();
      for (int q : degrees) bases.push_back({{"degree", q}, {"basis", sets_json(algebra->nbc_basis(q))}});
      out_ << io::json{{"circuits", sets_json(algebra->circuits())},
                       {"broken_circuits", sets_json(algebra->broken_circuits())},
                       {"nbc", bases}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "circuits: " << sets_text(algebra->circuits()) << "\n";
      out_ << "broken circuits: " << sets_text(algebra->broken_circuits()) << "\n";
      for (int q : degrees) out_ << "nbc" << q << ": " << sets_text(algebra->nbc_basis(q)) << "\n";
    }
    return ok;
  }

  int aomoto(const RunConfig& c) {
    auto complex = AomotoComplex(load_algebra(c));
    auto degrees = degrees_or(c, 0, complex.ell() - 1, "degree");
    io::json records = io::json::array();
    for (int q : degrees) {
      const auto& d = complex.differential(q);
      if (c.json) {
        records.push_back({{"degree", q},
                           {"rows", sets_json(complex.basis(q))},
                           {"cols", sets_json(complex.basis(q + 1))},
                           {"matrix", io::to_json(d)}});
      } else {
        out_ << "d^" << q << ": rows " << sets_text(complex.basis(q)) << ", cols " << sets_text(complex.basis(q + 1))
             << "\n"
             << d;
      }
    }
    if (c.json) out_ << io::json{{"differentials", records}}.dump(2) << "\n";
    return ok;
  }

  int cohomology(const RunConfig& c) {
    auto complex = AomotoComplex(load_algebra(c));
    auto w = load_weights(c, complex.n());
    auto h = os_cohomology(complex, w);
    bool nonres = generic_nonresonant(complex.algebra().type(), w);
    if (c.json) {
      out_ << io::json{{"weights", io::to_json(w)["weights"]},
                       {"nonresonant", nonres},
                       {"cohomology", io::to_json(h, complex)}}
                  .dump(2)
           << "\n";
      return ok;
    }
    out_ << "nonresonance check: " << (nonres ? "passed" : "not certified") << "\n";
    for (const auto& d : h.degrees) {
      out_ << "H^" << d.degree << ": dim " << d.dim() << "\n";
      for (const auto& r : d.representatives) out_ << "  " << element_text(io::as_element(r, complex.basis(d.degree))) << "\n";
    }
    return ok;
  }

  int resonance(const RunConfig& c) {
    auto complex = AomotoComplex(load_algebra(c));
    auto w = load_weights(c, complex.n());
    if (c.depth < 1) throw ValidationError("--depth must be at least 1");
    auto degrees = degrees_or(c, 0, complex.ell(), "degree");
    auto h = os_cohomology(complex, w);
    io::json records = io::json::array();
    for (int q : degrees) {
      auto dim = h.degrees[q].dim();
      bool inside = static_cast<int>(dim) >= c.depth;
      if (c.json) {
        records.push_back({{"degree", q}, {"dim", dim}, {"depth", c.depth}, {"in_resonance", inside}});
      } else {
        out_ << "q=" << q << "  dim H^q = " << dim << "  in R^" << q << "_" << c.depth << ": " << (inside ? "yes" : "no")
             << "\n";
      }
    }
    if (c.json) out_ << io::json{{"resonance", records}}.dump(2) << "\n";
    return ok;
  }

  int gm(const RunConfig& c) {
    auto algebra = load_algebra(c, 2);
    const auto& coarse = algebra->type();
    const int n = coarse.n();
    const int ell = coarse.ell();
    auto w = load_weights(c, n);
    PrincipalDependence pd;
    ChainEndomorphism tilde;
    if (!c.pencil.empty()) {
      if (c.inputs.size() != 1) throw ValidationError("--pencil takes exactly one arrangement file");
      auto p = parse_pencil(c.pencil);
      check_pencil_parameters(p.s, p.r, ell, n);
      pd = {p.s, p.r};
      tilde = omega_tilde_pencil(p.s, p.r, n, ell);
    } else {
      if (c.inputs.size() != 2) throw ValidationError("gm needs two arrangement files or one file with --pencil");
      auto fine = CombinatorialType::from_realization(io::read_arrangement(c.inputs[1]));
      pd = principal_dependence(coarse, fine);
      tilde = omega_tilde_degeneration(coarse, fine);
    }
    auto omega = induce_on_type(tilde, *algebra);
    AomotoComplex complex(algebra);
    auto h = os_cohomology(complex, w);
    Rational lambda_s = w.sum(pd.support);

    io::json big_omega = io::json::array();
    io::json spectrum = io::json::array();
    std::vector<RationalMatrix> blocks;
    std::vector<SpectrumReport> reports;
    for (int q = 0; q <= ell; ++q) {
      blocks.push_back(gm_endomorphism(omega, h.degrees[q], w));
      reports.push_back(spectrum_report(blocks.back(), lambda_s));
    }
    if (c.json) {
      for (int q = 0; q <= ell; ++q) {
        big_omega.push_back({{"degree", q}, {"matrix", io::to_json(blocks[q])}});
        auto rep = io::to_json(reports[q]);
        rep["degree"] = q;
        spectrum.push_back(rep);
      }
      out_ << io::json{{"principal_dependence", {{"S", pd.support.elements()}, {"r", pd.r}}},
                       {"omega", io::to_json(omega)},
                       {"cohomology", io::to_json(h, complex)},
                       {"Omega", big_omega},
                       {"spectrum", spectrum}}
                  .dump(2)
           << "\n";
      return ok;
    }
    out_ << "principal dependence: S = " << pd.support.to_string() << ", r = " << pd.r << "\n";
    for (int q = 0; q <= ell; ++q) {
      out_ << "omega^" << q << " on " << sets_text(omega.bases[q]) << "\n" << omega.blocks[q];
    }
    for (int q = 0; q <= ell; ++q) {
      out_ << "Omega^" << q << " (dim H^" << q << " = " << h.degrees[q].dim() << ")\n" << blocks[q];
    }
    out_ << "lambda_S = " << lambda_s.get_str() << "\n";
    for (int q = 0; q <= ell; ++q) {
      const auto& r = reports[q];
      out_ << "q=" << q << "  d0 = " << r.d0 << "  dS = " << r.ds << "  verified: " << (r.verified ? "yes" : "no");
      if (!r.applicable) out_ << "  (spectrum theorem inapplicable: lambda_S = 0)";
      out_ << "\n";
    }
    return ok;
  }

  int spectrum(const RunConfig& c) {
    auto type = load_type(c, 1);
    const int n = type.n();
    const int ell = type.ell();
    if (c.pencil.empty()) throw ValidationError("spectrum needs --pencil S r");
    auto p = parse_pencil(c.pencil);
    check_pencil_parameters(p.s, p.r, ell, n);
    std::optional<Weights> w;
    if (!c.weights_text.empty() || !c.weights_file.empty()) w = load_weights(c, n);
    auto tilde = omega_tilde_pencil(p.s, p.r, n, ell);
    auto symbolic = spectrum_check(tilde, p.s);
    auto degrees = degrees_or(c, 0, ell, "degree");
    io::json records = io::json::array();
    if (!c.json) {
      out_ << "S = " << p.s.to_string() << ", r = " << p.r << "\n";
      out_ << "omega(omega - y_S) = 0: " << (symbolic.passed ? "yes" : "no, " + symbolic.witness) << "\n";
    }
    for (int q : degrees) {
      auto dims = eigenspace_dims(n, p.s.size(), p.r, q, ell);
      io::json rec = {{"degree", q}, {"d0", dims.zero}, {"dS", dims.lambda_s}};
      std::string extra;
      if (w) {
        Rational lambda_s = w->sum(p.s);
        auto m = tilde.specialize(q, *w);
        auto check = spectrum_check(m, lambda_s, dims.lambda_s);
        rec["lambda_S"] = lambda_s.get_str();
        rec["rank"] = static_cast<long long>(rank(m));
        rec["verified"] = check.passed;
        if (is_zero(lambda_s)) rec["note"] = "spectrum theorem inapplicable: lambda_S = 0";
        extra = "  rank = " + std::to_string(rank(m)) + "  verified: " + (check.passed ? "yes" : "no");
        if (is_zero(lambda_s)) extra += "  (spectrum theorem inapplicable: lambda_S = 0)";
      }
      if (c.json) {
        records.push_back(rec);
      } else {
        out_ << "q=" << q << "  d0 = " << dims.zero << "  dS = " << dims.lambda_s << extra << "\n";
      }
    }
    if (c.json) {
      out_ << io::json{{"S", p.s.elements()}, {"r", p.r}, {"symbolic", symbolic.passed}, {"degrees", records}}.dump(2)
           << "\n";
    }
    return symbolic.passed ? ok : precondition_failure;
  }

 private:
  CombinatorialType load_type(const RunConfig& c, std::size_t max_inputs) const {
    if (c.inputs.empty()) throw ValidationError("missing arrangement file");
    if (c.inputs.size() > max_inputs) throw ValidationError("too many arrangement files");
    return CombinatorialType::from_realization(io::read_arrangement(c.inputs[0]));
  }

  std::shared_ptr<const OrlikSolomonAlgebra> load_algebra(const RunConfig& c, std::size_t max_inputs = 1) const {
    return std::make_shared<const OrlikSolomonAlgebra>(load_type(c, max_inputs));
  }

  static Weights load_weights(const RunConfig& c, int n) {
    if (!c.weights_text.empty() && !c.weights_file.empty()) {
      throw ValidationError("give either --weights or --weights-file, not both");
    }
    Weights w;
    if (!c.weights_text.empty()) {
      w = io::parse_weights(c.weights_text);
    } else if (!c.weights_file.empty()) {
      w = io::weights_from_json(io::read_json_file(c.weights_file));
    } else {
      throw ValidationError("weights are required (--weights or --weights-file)");
    }
    if (static_cast<int>(w.size()) != n) {
      throw ValidationError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    }
    return w;
  }

  static std::vector<int> degrees_or(const RunConfig& c, int lo, int hi, const char* what) {
    if (c.degree) {
      if (*c.degree < lo || *c.degree > hi) {
        throw ValidationError(std::string(what) + " " + std::to_string(*c.degree) + " outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
      }
      return {*c.degree};
    }
    std::vector<int> all;
    for (int q = lo; q <= hi; ++q) all.push_back(q);
    return all;
  }

  static io::json sets_json(const std::vector<Subset>& sets) {
    io::json a = io::json::array();
    for (Subset s : sets) a.push_back(s.elements());
    return a;
  }

  static std::string sets_text(const std::vector<Subset>& sets) {
    if (sets.empty()) return "(none)";
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? " " : "") + (sets[i].size() ? sets[i].to_string() : "1");
    return s;
  }

  static std::string element_text(const Combination<Rational>& x) {
    if (x.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : x) {
      std::string name = m.size() ? "a" + m.to_string() : "1";
      Rational a = abs(c);
      std::string coeff = a == 1 && m.size() ? "" : a.get_str() + (m.size() ? "*" : "");
      if (first) {
        s += (sgn(c) < 0 ? "-" : "") + coeff + (m.size() ? name : "");
      } else {
        s += (sgn(c) < 0 ? " - " : " + ") + coeff + (m.size() ? name : "");
      }
      first = false;
    }
    return s;
  }

  std::ostream& out_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orlik-Solomon algebras, Aomoto complexes and Gauss-Manin endomorphisms", "osgm"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub, std::size_t max_files) {
    sub->add_option("files", c.inputs, "arrangement JSON file(s)")->required()->expected(1, static_cast<int>(max_files));
    sub->add_flag("--json", c.json, "emit JSON instead of tables");
  };
  auto add_degree = [&](CLI::App* sub) { sub->add_option("--degree,-q", c.degree, "restrict to one degree"); };
  auto add_weights = [&](CLI::App* sub) {
    sub->add_option("--weights,-w", c.weights_text, "weights as \"a/b,c/d,...\"");
    sub->add_option("--weights-file", c.weights_file, "JSON file {\"weights\": [...]}");
  };
  auto add_pencil = [&](CLI::App* sub) {
    sub->add_option("--pencil", c.pencil, "principal dependence \"i,j,k\" r")->expected(2);
  };

  auto* deps = app.add_subcommand("deps", "dependent sets Dep_q and Dep*_q");
  add_common(deps, 1);
  add_degree(deps);
  auto* betti = app.add_subcommand("betti", "Betti numbers of the Orlik-Solomon algebra");
  add_common(betti, 1);
  auto* nbc = app.add_subcommand("nbc", "circuits, broken circuits and nbc bases");
  add_common(nbc, 1);
  add_degree(nbc);
  auto* aomoto = app.add_subcommand("aomoto", "differentials of the Aomoto complex");
  add_common(aomoto, 1);
  add_degree(aomoto);
  auto* cohomology = app.add_subcommand("cohomology", "cohomology of (A, a_lambda)");
  add_common(cohomology, 1);
  add_weights(cohomology);
  auto* resonance = app.add_subcommand("resonance", "resonance membership dim H^q >= m");
  add_common(resonance, 1);
  add_degree(resonance);
  add_weights(resonance);
  resonance->add_option("--depth,-m", c.depth, "resonance depth m")->capture_default_str();
  auto* gm = app.add_subcommand("gm", "Gauss-Manin endomorphisms of a degeneration");
  add_common(gm, 2);
  add_weights(gm);
  add_pencil(gm);
  auto* spectrum = app.add_subcommand("spectrum", "spectrum of omega(S, r) on the exterior algebra");
  add_common(spectrum, 1);
  add_degree(spectrum);
  add_weights(spectrum);
  add_pencil(spectrum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : validation_failure;
  }

  Runner runner(out);
  try {
    if (deps->parsed()) return runner.deps(c);
    if (betti->parsed()) return runner.betti(c);
    if (nbc->parsed()) return runner.nbc(c);
    if (aomoto->parsed()) return runner.aomoto(c);
    if (cohomology->parsed()) return runner.cohomology(c);
    if (resonance->parsed()) return runner.resonance(c);
    if (gm->parsed()) return runner.gm(c);
    if (spectrum->parsed()) return runner.spectrum(c);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return validation_failure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return precondition_failure;
  }
  return validation_failure;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"osgm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace osgm::cli
