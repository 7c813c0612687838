// Command-line front end: renders HS decompositions, separability verdicts,
// correlation reports, braid-relation checks, the braid Bell basis and a
// Werner-line scan, as text or JSON.
//
// Exit codes: 0 success, 1 failed verification (relation/orthonormality/scan
// checks), 2 usage or input errors. Verdicts themselves never change the
// exit status.

#include <cstdio>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "qhs/qhs.hpp"

namespace {

using namespace qhs;

struct Options {
  std::string state;
  double tol = kDefaultTol;
  bool as_json = false;
  bool full = false;
  bool certificate = false;
  int n = 3;
  int steps = 101;
};

Matrix resolve_density(const std::string& spec_text, const StateSpec& spec) {
  Matrix rho = spec.is_file() ? load_matrix(spec.file_path()) : spec.density();
  rho.qubit_count();  // power-of-two check
  if (!is_hermitian(rho, 1e-9))
    throw std::invalid_argument("state '" + spec_text + "' is not Hermitian");
  if (std::abs(trace(rho) - cplx(1.0)) > 1e-6)
    throw std::invalid_argument("state '" + spec_text + "' does not have trace 1");
  return rho;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.6f", v);
  return buf;
}

// The two-qubit and three-qubit sector names: weight-1 vectors r/s (and f for
// the third qubit), weight-2 blocks t/o/f by which qubit carries the identity,
// and G for full weight. Pauli letters index as X=1, Y=2, Z=3.
std::string sector_label(const PauliString& s) {
  const int n = s.size();
  if (n != 2 && n != 3) return {};
  std::string pos, idx;
  for (int q = 0; q < n; ++q) {
    const char l = s.letter(q);
    if (l == 'I') continue;
    pos += static_cast<char>('0' + q);
    idx += static_cast<char>('0' + detail::pauli_digit(l));
  }
  if (pos.empty()) return {};
  if (n == 2) {
    if (pos == "0") return "r" + idx;
    if (pos == "1") return "s" + idx;
    return "t" + idx;
  }
  if (pos == "0") return "r" + idx;
  if (pos == "1") return "s" + idx;
  if (pos == "2") return "f" + idx;
  if (pos == "12") return "t" + idx;
  if (pos == "02") return "o" + idx;
  if (pos == "01") return "f" + idx;
  return "G" + idx;
}

int cmd_decompose(const Options& opt) {
  const StateSpec spec = StateSpec::parse(opt.state);
  const Matrix rho = resolve_density(opt.state, spec);
  const HSDecomposition d = hs_decompose(rho);

  if (opt.as_json) {
    std::cout << hs_to_json(d, 1e-12, opt.full).dump(2) << "\n";
    return 0;
  }

  const int n = d.qubit_count();
  std::cout << "HS decomposition of " << spec.describe() << " (" << n << " qubits)\n";
  for (int w = 0; w <= n; ++w) {
    const auto rows = coefficients_by_weight(d, w, opt.full);
    std::vector<std::pair<PauliString, double>> shown;
    for (const auto& r : rows)
      if (opt.full || std::abs(r.second) >= 1e-12) shown.push_back(r);
    if (shown.empty()) continue;
    std::cout << "weight " << w << ":\n";
    for (const auto& [s, v] : shown) {
      std::cout << "  " << s.str() << "  " << fmt(v);
      const std::string label = sector_label(s);
      if (!label.empty()) std::cout << "  (" << label << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

std::string factor_label(const Matrix& f) {
  const double bx = trace(matmul(f, pauli_matrix('X'))).real();
  const double by = trace(matmul(f, pauli_matrix('Y'))).real();
  const double bz = trace(matmul(f, pauli_matrix('Z'))).real();
  const auto near = [](double v, double t) { return std::abs(v - t) < 1e-9; };
  if (near(bx, 0) && near(by, 0) && near(bz, 0)) return "I/2";
  const char axes[] = {'X', 'Y', 'Z'};
  const double b[] = {bx, by, bz};
  for (int k = 0; k < 3; ++k)
    if (near(std::abs(b[k]), 1.0) && near(b[(k + 1) % 3], 0) && near(b[(k + 2) % 3], 0))
      return std::string("(I") + (b[k] > 0 ? '+' : '-') + axes[k] + ")/2";
  char buf[64];
  std::snprintf(buf, sizeof buf, "rho(%.3f,%.3f,%.3f)", bx, by, bz);
  return buf;
}

int cmd_separability(const Options& opt) {
  const StateSpec spec = StateSpec::parse(opt.state);
  const Matrix rho = resolve_density(opt.state, spec);
  const SeparabilityVerdict v = criterion_verdict(rho, opt.tol);
  const int n = rho.qubit_count();

  // Independent evidence: PPT across every single-qubit cut.
  json ppt_rows = json::array();
  std::vector<std::pair<std::vector<int>, bool>> cuts;
  if (n >= 2) {
    for (int q = 0; q < n; ++q) {
      const bool ok = ppt_check(rho, QubitSubset({q}, n), opt.tol);
      cuts.push_back({{q}, ok});
      ppt_rows.push_back(json{{"cut", std::vector<int>{q}}, {"ppt", ok}});
    }
  }

  json cert_json;
  std::string cert_text;
  if (opt.certificate) {
    if (v.verdict != Verdict::separable) {
      cert_text = "no certificate: verdict is not separable";
    } else {
      try {
        const SeparableDecomposition cert =
            build_separable_decomposition(hs_decompose(rho), opt.tol);
        const double err = max_abs_diff(cert.reconstruct(), rho);
        json terms = json::array();
        std::ostringstream lines;
        for (const auto& t : cert.terms) {
          json factors = json::array();
          lines << "  weight " << fmt(t.weight) << ":  ";
          for (std::size_t k = 0; k < t.factors.size(); ++k) {
            factors.push_back(matrix_to_json(t.factors[k]));
            if (k) lines << " (x) ";
            lines << factor_label(t.factors[k]);
          }
          lines << "\n";
          terms.push_back(json{{"weight", t.weight}, {"factors", std::move(factors)}});
        }
        cert_json = json{{"terms", std::move(terms)}, {"reconstruction_error", err}};
        std::ostringstream head;
        head << "certificate (" << cert.terms.size()
             << " product terms, reconstruction error " << std::scientific
             << std::setprecision(2) << err << "):\n";
        cert_text = head.str() + lines.str();
      } catch (const std::invalid_argument& e) {
        cert_text = std::string("no certificate: ") + e.what();
      }
    }
  }

  if (opt.as_json) {
    json out{{"state", spec.describe()},
             {"n", n},
             {"sum_abs", v.sum_abs},
             {"verdict", verdict_name(v.verdict)},
             {"reason", v.reason},
             {"ppt", std::move(ppt_rows)}};
    if (opt.certificate) out["certificate"] = std::move(cert_json);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "state: " << spec.describe() << " (" << n << " qubits)\n"
            << "sum over full-weight coefficients: " << fmt(v.sum_abs) << "\n"
            << "verdict: " << verdict_name(v.verdict) << "\n"
            << "reason: " << v.reason << "\n";
  for (const auto& [cut, ok] : cuts) {
    std::cout << "ppt cut {" << cut[0] << "}|rest: "
              << (ok ? "positive (no entanglement detected)"
                     : "negative partial transpose (entangled across cut)")
              << "\n";
  }
  if (opt.certificate) std::cout << cert_text;
  return 0;
}

int cmd_report(const Options& opt) {
  const StateSpec spec = StateSpec::parse(opt.state);
  const Matrix rho = resolve_density(opt.state, spec);
  const CorrelationReport rep = correlation_report(rho, opt.tol);

  if (opt.as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "correlation report: " << spec.describe() << " (" << rep.n << " qubits)\n";
  for (const auto& e : rep.entries) {
    std::cout << "  qubits {";
    for (std::size_t k = 0; k < e.kept.size(); ++k)
      std::cout << (k ? "," : "") << e.kept[k];
    std::cout << "}: sum = " << fmt(e.verdict.sum_abs) << ", "
              << verdict_name(e.verdict.verdict) << "\n";
  }
  std::cout << "  " << rep.single_qubit_note << "\n";
  return 0;
}

int cmd_braid_check(const Options& opt) {
  const BraidDeviations dev = braid_relation_deviations(opt.n);
  const double yb = yang_baxter_deviation();
  const bool pass = dev.max() <= opt.tol && yb <= opt.tol;

  if (opt.as_json) {
    std::cout << json{{"n", opt.n},
                      {"commuting", dev.commuting},
                      {"braid", dev.braid},
                      {"inverse", dev.inverse},
                      {"yang_baxter", yb},
                      {"tol", opt.tol},
                      {"pass", pass}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "braid relations on " << opt.n << " qubits (dim " << (1 << opt.n) << ")\n"
              << std::scientific << std::setprecision(3)
              << "  commuting family  g_i g_j = g_j g_i, |i-j|>1 : max deviation "
              << dev.commuting << "\n"
              << "  braid family      g_i g_j g_i = g_j g_i g_j : max deviation "
              << dev.braid << "\n"
              << "  inverses          g_i g_i^-1 = I            : max deviation "
              << dev.inverse << "\n"
              << "  yang-baxter       (8x8 two-sided product)   : max deviation " << yb
              << "\n"
              << "result: " << (pass ? "PASS" : "FAIL") << " (tol " << opt.tol << ")\n";
  }
  return pass ? 0 : 1;
}

int cmd_bell_states(const Options& opt) {
  const BellBasis basis = bell_basis(opt.n);
  const double gram = basis.gram_deviation();
  const bool pass = gram <= opt.tol;

  if (opt.as_json) {
    json states = json::array();
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
      const HSDecomposition d = hs_decompose(outer(basis.states[i]));
      states.push_back(json{{"i", i + 1},
                            {"vector", state_to_json(basis.states[i])},
                            {"coeffs", hs_to_json(d, 1e-12, opt.full)["coeffs"]}});
    }
    std::cout << json{{"n", opt.n},
                      {"gram_deviation", gram},
                      {"orthonormal", pass},
                      {"states", std::move(states)}}
                     .dump(2)
              << "\n";
    return pass ? 0 : 1;
  }

  std::cout << "braid Bell basis on " << opt.n << " qubits: " << basis.states.size()
            << " states, gram deviation " << std::scientific << std::setprecision(3)
            << gram << (pass ? " (orthonormal)" : " (NOT orthonormal)") << "\n";
  for (std::size_t i = 0; i < basis.states.size(); ++i) {
    const StateVector& v = basis.states[i];
    std::cout << "B" << (i + 1) << ":\n  amplitudes:";
    for (int k = 0; k < v.dim(); ++k) {
      if (std::abs(v[k]) < 1e-12) continue;
      std::cout << "  [" << k << "] " << fmt(v[k].real());
      if (std::abs(v[k].imag()) >= 1e-12) std::cout << " " << fmt(v[k].imag()) << "i";
    }
    std::cout << "\n  coefficients:";
    const HSDecomposition d = hs_decompose(outer(v));
    d.for_each(
        [&](std::uint64_t code, double val) {
          const PauliString s = PauliString::from_code(opt.n, code);
          std::cout << "  " << s.str() << "=" << fmt(val);
          const std::string label = sector_label(s);
          if (!label.empty()) std::cout << " (" << label << ")";
        },
        1e-12);
    std::cout << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_werner_scan(const Options& opt) {
  if (opt.steps < 2) throw std::invalid_argument("werner-scan: steps must be >= 2");
  json rows = json::array();
  bool all_agree = true;
  if (!opt.as_json)
    std::cout << "    p      sum     criterion                ppt        agree\n";
  for (int k = 0; k < opt.steps; ++k) {
    const double p = static_cast<double>(k) / (opt.steps - 1);
    const Matrix rho = werner_state(p);
    const SeparabilityVerdict v = criterion_verdict(rho, opt.tol);
    const bool ppt = ppt_check(rho, QubitSubset({1}, 2), opt.tol);
    const bool agree = (v.verdict == Verdict::separable) == ppt;
    all_agree = all_agree && agree;
    if (opt.as_json) {
      rows.push_back(json{{"p", p},
                          {"sum_abs", v.sum_abs},
                          {"verdict", verdict_name(v.verdict)},
                          {"ppt", ppt},
                          {"agree", agree}});
    } else {
      std::cout << "  " << fmt(p) << " " << fmt(v.sum_abs) << "  " << std::left
                << std::setw(24) << verdict_name(v.verdict) << std::right
                << (ppt ? "positive " : "negative ") << "  "
                << (agree ? "yes" : "NO") << "\n";
    }
  }
  if (opt.as_json) {
    std::cout << json{{"steps", opt.steps}, {"all_agree", all_agree},
                      {"rows", std::move(rows)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (all_agree ? "criterion and ppt agree at every grid point\n"
                            : "DISAGREEMENT between criterion and ppt\n");
  }
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-basis analysis of multi-qubit density matrices: "
               "Hilbert-Schmidt decompositions, separability verdicts with "
               "product-state certificates, and the braid-generated Bell basis"};
  app.require_subcommand(1);

  Options opt;

  const auto add_state = [&](CLI::App* cmd) {
    cmd->add_option("--state", opt.state,
                    "state spec: ghz:N | singlet | werner:P | basis:N:I | bell:N:I | file:PATH")
        ->required();
  };
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", opt.tol, "tolerance")->check(CLI::PositiveNumber);
    cmd->add_flag("--json", opt.as_json, "emit JSON instead of text");
  };

  CLI::App* dec = app.add_subcommand("decompose", "print the HS coefficient table");
  add_state(dec);
  add_common(dec);
  dec->add_flag("--full", opt.full, "include zero coefficients");

  CLI::App* sep = app.add_subcommand("separability", "criterion verdict plus PPT cross-check");
  add_state(sep);
  add_common(sep);
  sep->add_flag("--certificate", opt.certificate, "print the separable decomposition");

  CLI::App* rep = app.add_subcommand("report", "per-subset correlation verdicts");
  add_state(rep);
  add_common(rep);

  CLI::App* braid = app.add_subcommand("braid-check", "verify the braid relations and Yang-Baxter");
  braid->add_option("--n", opt.n, "qubit count (2..8)")->check(CLI::Range(2, 8));
  add_common(braid);

  CLI::App* bell = app.add_subcommand("bell-states", "emit the braid Bell basis with HS tables");
  bell->add_option("--n", opt.n, "qubit count (2..8)")->check(CLI::Range(2, 8));
  add_common(bell);
  bell->add_flag("--full", opt.full, "include zero coefficients");

  CLI::App* scan = app.add_subcommand("werner-scan", "criterion vs PPT along the Werner line");
  scan->add_option("--steps", opt.steps, "grid points (>= 2)")->check(CLI::Range(2, 100000));
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(dec)) return cmd_decompose(opt);
    if (app.got_subcommand(sep)) return cmd_separability(opt);
    if (app.got_subcommand(rep)) return cmd_report(opt);
    if (app.got_subcommand(braid)) return cmd_braid_check(opt);
    if (app.got_subcommand(bell)) return cmd_bell_states(opt);
    if (app.got_subcommand(scan)) return cmd_werner_scan(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
