#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfplab/errors.hpp"
#include "gfplab/gfp.hpp"
#include "gfplab/json_io.hpp"
#include "gfplab/markov.hpp"
#include "gfplab/ortho.hpp"
#include "gfplab/roots.hpp"
#include "gfplab/spectral.hpp"

namespace {

using nlohmann::json;

struct FamilyArgs {
  std::string spec;
  std::string file;

  gfp::GfpFamily resolve() const {
    if (!file.empty()) return gfp::family_from_file(file);
    if (!spec.empty()) return gfp::family_from_spec(spec);
    gfp::fail(gfp::ErrorCode::ParseError, "pass --family <name|json> or --family-file <path>");
  }
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.spec, "registry name or inline JSON object");
  cmd->add_option("--family-file", args.file, "path to a JSON family spec");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json chain_json(const gfp::DiscreteChain& ch, int rows) {
  json j;
  j["p"] = gfp::rational_json(ch.p);
  j["r"] = gfp::rational_json(ch.r);
  j["q"] = gfp::rational_json(ch.q);
  j["p0"] = gfp::rational_json(ch.p0);
  j["r0"] = gfp::rational_json(ch.r0);
  j["q0"] = gfp::rational_json(ch.q0);
  j["stochastic"] = ch.stochastic();
  json mat = json::array();
  for (int n = 0; n < rows; ++n) {
    json row;
    if (n > 0) row["q"] = gfp::rational_json(ch.q_at(n));
    row["r"] = gfp::rational_json(ch.r_at(n));
    row["p"] = gfp::rational_json(ch.p_at(n));
    mat.push_back(std::move(row));
  }
  j["rows"] = std::move(mat);
  return j;
}

json generator_json(const gfp::ContinuousGenerator& gen, int rows) {
  json j;
  j["lambda0"] = gfp::rational_json(gen.lambda0);
  j["lambda"] = gfp::rational_json(gen.lambda);
  j["mu"] = gfp::rational_json(gen.mu);
  j["mu0"] = gfp::rational_json(gen.mu0);
  j["beta"] = gfp::rational_json(gen.beta);
  j["conservative"] = gen.conservative();
  json mat = json::array();
  for (int n = 0; n < rows; ++n) {
    json row;
    if (n > 0) row["mu"] = gfp::rational_json(gen.mu_at(n));
    row["beta"] = gfp::rational_json(gen.beta_at(n));
    row["lambda"] = gfp::rational_json(gen.lambda_at(n));
    mat.push_back(std::move(row));
  }
  j["rows"] = std::move(mat);
  return j;
}

json potential_json(const gfp::PotentialCoefficients& pc) {
  json j;
  json pis = json::array();
  for (const gfp::Rational& x : pc.pi) pis.push_back(gfp::rational_json(x));
  j["pi"] = std::move(pis);
  j["ratio"] = gfp::rational_json(pc.ratio);
  j["sum_partial"] = gfp::rational_json(pc.sum_partial);
  j["convergent"] = pc.convergent;
  if (pc.convergent) j["limit"] = gfp::rational_json(pc.limit);
  return j;
}

json verdict_json(const gfp::ErgodicityVerdict& v) {
  json j;
  j["chain_kind"] = gfp::chain_kind_name(v.chain_kind);
  j["verdict"] = v.ergodic ? "Ergodic" : "NotErgodic";
  j["ratio"] = gfp::rational_json(v.ratio);
  if (v.divergent) {
    j["series_value"] = "Divergent";
  } else {
    j["series_value"] = gfp::rational_json(v.series_value);
  }
  j["in_strict_window"] = v.in_strict_window;
  return j;
}

json transition_json(const gfp::TransitionResult& r) {
  json j;
  j["i"] = r.i;
  j["j"] = r.j;
  j["horizon"] = r.horizon;
  j["value"] = r.value;
  j["method"] = gfp::transition_method_name(r.method);
  if (r.method == gfp::TransitionMethod::MonteCarlo) j["error_bar"] = r.error_bar;
  return j;
}

json weight_json(const gfp::WeightSpec& w) {
  json j;
  j["kind"] = w.kind == gfp::WeightKind::FibonacciWeight ? "fibonacci" : "lucas";
  j["big_g"] = gfp::rational_json(w.big_g);
  j["support"] = {w.s1, w.s2};
  j["mass"] = w.mass;
  j["scale"] = w.scale;
  return j;
}

gfp::Rational parse_rational_flag(const std::string& text, const char* flag) {
  if (text.empty()) {
    gfp::fail(gfp::ErrorCode::ParseError, std::string("missing required flag ") + flag);
  }
  return gfp::Rational::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfp-lab: generalized Fibonacci polynomials, their weights, roots, and chains"};
  // --h is a chain parameter, so help must not claim the short -h
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  // registry
  CLI::App* registry = app.add_subcommand("registry", "list the thirteen classical families");
  registry->callback([] {
    json arr = json::array();
    for (const gfp::GfpFamily& f : gfp::classical_registry()) arr.push_back(gfp::family_json(f));
    emit(arr);
  });

  // generate
  {
    CLI::App* cmd = app.add_subcommand("generate", "terms 0..n by the recurrence");
    auto fam = std::make_shared<FamilyArgs>();
    auto n = std::make_shared<int>(8);
    add_family_flags(cmd, *fam);
    cmd->add_option("--n", *n, "last term index")->capture_default_str();
    cmd->callback([fam, n] {
      const gfp::GfpFamily f = fam->resolve();
      const gfp::GfpSequence seq = gfp::generate(f, *n);
      json j;
      j["family"] = gfp::family_json(f);
      json terms = json::array(), pretty = json::array();
      for (const gfp::Polynomial& p : seq.terms) {
        terms.push_back(gfp::polynomial_json(p));
        pretty.push_back(p.str());
      }
      j["terms"] = std::move(terms);
      j["pretty"] = std::move(pretty);
      emit(j);
    });
  }

  // expand
  {
    CLI::App* cmd = app.add_subcommand("expand", "closed-form binomial expansion of term n");
    auto fam = std::make_shared<FamilyArgs>();
    auto n = std::make_shared<int>(5);
    add_family_flags(cmd, *fam);
    cmd->add_option("--n", *n, "term index")->capture_default_str();
    cmd->callback([fam, n] {
      const gfp::GfpFamily f = fam->resolve();
      const gfp::Polynomial p = gfp::term(f, *n);
      json j;
      j["n"] = *n;
      j["coefficients"] = gfp::polynomial_json(p);
      j["pretty"] = p.str();
      emit(j);
    });
  }

  // binet
  {
    CLI::App* cmd = app.add_subcommand("binet", "Binet evaluation against the recurrence");
    auto fam = std::make_shared<FamilyArgs>();
    auto n = std::make_shared<int>(5);
    auto re = std::make_shared<double>(1.0);
    auto im = std::make_shared<double>(0.0);
    add_family_flags(cmd, *fam);
    cmd->add_option("--n", *n, "term index")->capture_default_str();
    cmd->add_option("--re", *re, "evaluation point, real part")->capture_default_str();
    cmd->add_option("--im", *im, "evaluation point, imaginary part")->capture_default_str();
    cmd->callback([fam, n, re, im] {
      const gfp::GfpFamily f = fam->resolve();
      const gfp::Complex x0(*re, *im);
      const gfp::Complex via_binet = gfp::binet_eval(f, *n, x0);
      const gfp::Complex via_recurrence = gfp::eval_term_at(f, *n, x0);
      json j;
      j["n"] = *n;
      j["x0"] = {{"re", *re}, {"im", *im}};
      j["binet"] = {{"re", via_binet.real()}, {"im", via_binet.imag()}};
      j["recurrence"] = {{"re", via_recurrence.real()}, {"im", via_recurrence.imag()}};
      j["abs_error"] = std::abs(via_binet - via_recurrence);
      emit(j);
    });
  }

  // roots
  {
    CLI::App* cmd = app.add_subcommand("roots", "roots of term n via the transfer lattice");
    auto fam = std::make_shared<FamilyArgs>();
    auto n = std::make_shared<int>(5);
    auto tol = std::make_shared<double>(1e-8);
    add_family_flags(cmd, *fam);
    cmd->add_option("--n", *n, "term index")->capture_default_str();
    cmd->add_option("--tol", *tol, "residual tolerance")->capture_default_str();
    cmd->callback([fam, n, tol] {
      const gfp::GfpFamily f = fam->resolve();
      const gfp::RootSet rs = gfp::gfp_roots(f, *n, *tol);
      json j;
      j["n"] = rs.n;
      j["tolerance"] = rs.tolerance;
      json roots = json::array();
      for (size_t k = 0; k < rs.roots.size(); ++k) {
        roots.push_back({{"re", rs.roots[k].real()},
                         {"im", rs.roots[k].imag()},
                         {"residual", rs.residuals[k]}});
      }
      j["roots"] = std::move(roots);
      emit(j);
    });
  }

  // classify
  {
    CLI::App* cmd = app.add_subcommand("classify", "orthogonality verdict for a family");
    auto fam = std::make_shared<FamilyArgs>();
    auto n_max = std::make_shared<int>(10);
    auto tol = std::make_shared<double>(1e-8);
    add_family_flags(cmd, *fam);
    cmd->add_option("--nmax", *n_max, "largest subscript in the Gram matrix")->capture_default_str();
    cmd->add_option("--tol", *tol, "off-diagonal tolerance")->capture_default_str();
    cmd->callback([fam, n_max, tol] {
      const gfp::GfpFamily f = fam->resolve();
      const gfp::OrthoVerdict v = gfp::classify(f, *n_max, *tol);
      json j;
      j["family"] = f.name.empty() ? gfp::family_json(f) : json(f.name);
      j["verdict"] = gfp::ortho_class_name(v.verdict);
      j["reason"] = v.reason;
      j["max_offdiag"] = v.max_offdiag;
      if (v.weight) j["weight"] = weight_json(*v.weight);
      emit(j);
    });
  }

  // gram
  {
    CLI::App* cmd = app.add_subcommand("gram", "Gram matrix under the family weight");
    auto fam = std::make_shared<FamilyArgs>();
    auto n_max = std::make_shared<int>(6);
    auto format = std::make_shared<std::string>("json");
    add_family_flags(cmd, *fam);
    cmd->add_option("--nmax", *n_max, "largest subscript")->capture_default_str();
    cmd->add_option("--format", *format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->callback([fam, n_max, format] {
      const gfp::GfpFamily f = fam->resolve();
      const gfp::GramMatrix gm = gfp::gram(f, *n_max);
      if (*format == "csv") {
        std::cout << "i,j,value\n";
        for (int a = gm.lo; a <= gm.hi; ++a) {
          for (int b = gm.lo; b <= gm.hi; ++b) {
            std::cout << a << "," << b << "," << gfp::format_real(gm.at(a, b)) << "\n";
          }
        }
        return;
      }
      json j;
      j["lo"] = gm.lo;
      j["hi"] = gm.hi;
      j["quad_error"] = gm.quad_error;
      json rows = json::array();
      for (int a = gm.lo; a <= gm.hi; ++a) {
        json row = json::array();
        for (int b = gm.lo; b <= gm.hi; ++b) row.push_back(gm.at(a, b));
        rows.push_back(std::move(row));
      }
      j["entries"] = std::move(rows);
      emit(j);
    });
  }

  // walk
  {
    CLI::App* cmd = app.add_subcommand("walk", "random walk induced by d = c x + h");
    auto c = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto rows = std::make_shared<int>(10);
    cmd->add_option("--c", *c, "leading coefficient (rational)")->required();
    cmd->add_option("--h", *h, "constant term (rational)")->required();
    cmd->add_option("--rows", *rows, "rows and potential terms to print")->capture_default_str();
    cmd->callback([c, h, rows] {
      const gfp::DiscreteChain ch =
          gfp::walk_from_lucas(parse_rational_flag(*c, "--c"), parse_rational_flag(*h, "--h"));
      json j;
      j["chain"] = chain_json(ch, *rows);
      j["potential"] = potential_json(gfp::potential_coefficients(ch, *rows));
      j["ergodicity"] = verdict_json(gfp::ergodicity(ch));
      emit(j);
    });
  }

  // generator
  {
    CLI::App* cmd = app.add_subcommand("generator", "birth-death generator, d = c x + (k+4)/4");
    auto c = std::make_shared<std::string>();
    auto k = std::make_shared<std::string>();
    auto rows = std::make_shared<int>(10);
    cmd->add_option("--c", *c, "leading coefficient (rational, negative)")->required();
    cmd->add_option("--k", *k, "constant 4 big_g (rational, positive)")->required();
    cmd->add_option("--rows", *rows, "rows and potential terms to print")->capture_default_str();
    cmd->callback([c, k, rows] {
      const gfp::ContinuousGenerator gen =
          gfp::generator_from_lucas(parse_rational_flag(*c, "--c"), parse_rational_flag(*k, "--k"));
      json j;
      j["generator"] = generator_json(gen, *rows);
      j["potential"] = potential_json(gfp::potential_coefficients(gen, *rows));
      j["ergodicity"] = verdict_json(gfp::ergodicity(gen));
      emit(j);
    });
  }

  // km
  {
    CLI::App* cmd = app.add_subcommand("km", "spectral transition probability with oracles");
    auto c = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto k = std::make_shared<std::string>();
    auto continuous = std::make_shared<bool>(false);
    auto i = std::make_shared<int>(0);
    auto jx = std::make_shared<int>(0);
    auto n = std::make_shared<int>(1);
    auto t = std::make_shared<double>(1.0);
    auto oracle = std::make_shared<std::string>("");
    auto size = std::make_shared<int>(0);
    auto trials = std::make_shared<long long>(100000);
    auto seed = std::make_shared<unsigned long long>(42);
    cmd->add_option("--c", *c, "leading coefficient (rational)")->required();
    cmd->add_option("--h", *h, "constant term (discrete chains)");
    cmd->add_option("--k", *k, "constant 4 big_g (continuous chains)");
    cmd->add_flag("--continuous", *continuous, "continuous-time generator");
    cmd->add_option("--i", *i, "start state")->capture_default_str();
    cmd->add_option("--j", *jx, "target state")->capture_default_str();
    cmd->add_option("--n", *n, "steps (discrete)")->capture_default_str();
    cmd->add_option("--t", *t, "time (continuous)")->capture_default_str();
    cmd->add_option("--oracle", *oracle, "also run an oracle: power, expm, or mc")
        ->check(CLI::IsMember({"power", "expm", "mc"}));
    cmd->add_option("--size", *size, "oracle truncation size (default 200/300)");
    cmd->add_option("--trials", *trials, "mc oracle trials")->capture_default_str();
    cmd->add_option("--seed", *seed, "mc oracle seed")->capture_default_str();
    cmd->callback([c, h, k, continuous, i, jx, n, t, oracle, size, trials, seed] {
      json out = json::array();
      if (*continuous) {
        const gfp::ContinuousGenerator gen = gfp::generator_from_lucas(
            parse_rational_flag(*c, "--c"), parse_rational_flag(*k, "--k"));
        out.push_back(transition_json(gfp::km_continuous(gen, *i, *jx, *t)));
        if (*oracle == "expm") {
          const int sz = *size > 0 ? *size : 300;
          const gfp::TruncatedExp te = gfp::expm_oracle(gen, sz, *t);
          gfp::TransitionResult r;
          r.i = *i;
          r.j = *jx;
          r.horizon = *t;
          r.value = te.at(*i, *jx);
          r.method = gfp::TransitionMethod::MatrixExponential;
          out.push_back(transition_json(r));
        } else if (!oracle->empty()) {
          gfp::fail(gfp::ErrorCode::DomainError, "continuous chains support --oracle expm");
        }
        emit(out);
        return;
      }
      const gfp::DiscreteChain ch =
          gfp::walk_from_lucas(parse_rational_flag(*c, "--c"), parse_rational_flag(*h, "--h"));
      out.push_back(transition_json(gfp::km_discrete(ch, *i, *jx, *n)));
      if (*oracle == "power") {
        const int sz = *size > 0 ? *size : 200;
        const gfp::TruncatedPower tp = gfp::power_oracle(ch, sz, *n);
        gfp::TransitionResult r;
        r.i = *i;
        r.j = *jx;
        r.horizon = *n;
        r.value = tp.at(*i, *jx);
        r.method = gfp::TransitionMethod::MatrixPower;
        out.push_back(transition_json(r));
      } else if (*oracle == "mc") {
        const gfp::McResult mc = gfp::mc_simulate(ch, *i, *n, *trials, *seed);
        gfp::TransitionResult r;
        r.i = *i;
        r.j = *jx;
        r.horizon = *n;
        r.value = mc.frequency(*jx);
        r.method = gfp::TransitionMethod::MonteCarlo;
        r.error_bar = mc.std_error(*jx);
        out.push_back(transition_json(r));
      } else if (!oracle->empty()) {
        gfp::fail(gfp::ErrorCode::DomainError, "discrete chains support --oracle power or mc");
      }
      emit(out);
    });
  }

  // simulate
  {
    CLI::App* cmd = app.add_subcommand("simulate", "seeded empirical distribution after n steps");
    auto c = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto i = std::make_shared<int>(0);
    auto n = std::make_shared<int>(10);
    auto trials = std::make_shared<long long>(1000000);
    auto seed = std::make_shared<unsigned long long>(42);
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("--c", *c, "leading coefficient (rational)")->required();
    cmd->add_option("--h", *h, "constant term (rational)")->required();
    cmd->add_option("--i", *i, "start state")->capture_default_str();
    cmd->add_option("--n", *n, "steps")->capture_default_str();
    cmd->add_option("--trials", *trials, "number of trials")->capture_default_str();
    cmd->add_option("--seed", *seed, "random seed")->capture_default_str();
    cmd->add_option("--format", *format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->callback([c, h, i, n, trials, seed, format] {
      const gfp::DiscreteChain ch =
          gfp::walk_from_lucas(parse_rational_flag(*c, "--c"), parse_rational_flag(*h, "--h"));
      const gfp::McResult mc = gfp::mc_simulate(ch, *i, *n, *trials, *seed);
      if (*format == "json") {
        json j;
        j["i"] = mc.i;
        j["n"] = mc.n;
        j["trials"] = mc.trials;
        j["seed"] = mc.seed;
        json states = json::array();
        for (size_t s = 0; s < mc.counts.size(); ++s) {
          states.push_back({{"state", s},
                            {"count", mc.counts[s]},
                            {"frequency", mc.frequency(static_cast<int>(s))},
                            {"std_error", mc.std_error(static_cast<int>(s))}});
        }
        j["states"] = std::move(states);
        j["absorbed"] = {{"count", mc.absorbed},
                         {"frequency", mc.absorbed_frequency()},
                         {"std_error", mc.absorbed_std_error()}};
        emit(j);
        return;
      }
      std::cout << "state,count,frequency,std_error\n";
      for (size_t s = 0; s < mc.counts.size(); ++s) {
        std::cout << s << "," << mc.counts[s] << ","
                  << gfp::format_real(mc.frequency(static_cast<int>(s))) << ","
                  << gfp::format_real(mc.std_error(static_cast<int>(s))) << "\n";
      }
      std::cout << "absorbed," << mc.absorbed << "," << gfp::format_real(mc.absorbed_frequency())
                << "," << gfp::format_real(mc.absorbed_std_error()) << "\n";
    });
  }

  // ergodicity
  {
    CLI::App* cmd = app.add_subcommand("ergodicity", "series-level ergodicity verdict");
    auto c = std::make_shared<std::string>();
    auto h = std::make_shared<std::string>();
    auto k = std::make_shared<std::string>();
    auto continuous = std::make_shared<bool>(false);
    cmd->add_option("--c", *c, "leading coefficient (rational)")->required();
    cmd->add_option("--h", *h, "constant term (discrete chains)");
    cmd->add_option("--k", *k, "constant 4 big_g (continuous chains)");
    cmd->add_flag("--continuous", *continuous, "continuous-time generator");
    cmd->callback([c, h, k, continuous] {
      if (*continuous) {
        const gfp::ContinuousGenerator gen = gfp::generator_from_lucas(
            parse_rational_flag(*c, "--c"), parse_rational_flag(*k, "--k"));
        emit(verdict_json(gfp::ergodicity(gen)));
        return;
      }
      const gfp::DiscreteChain ch =
          gfp::walk_from_lucas(parse_rational_flag(*c, "--c"), parse_rational_flag(*h, "--h"));
      emit(verdict_json(gfp::ergodicity(ch)));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const gfp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
