#include "acnet/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include <CLI11.hpp>

#include "acnet/characterize.hpp"
#include "acnet/io.hpp"
#include "acnet/response.hpp"
#include "acnet/synthesize.hpp"

namespace acnet {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + " " + fmt(z.imag()); }

void print_verdict(const ValidationVerdict& v, std::ostream& out) {
  const auto line = [&out](const char* name, const ConditionCheck& c) {
    out << name << " residual " << fmt(c.residual) << "  threshold " << fmt(c.threshold) << "  "
        << (c.pass ? "PASS" : "FAIL") << "\n";
  };
  line("symmetry:  ", v.symmetry);
  line("row sums:  ", v.row_sums);
  line("psd:       ", v.psd);
  out << "kernel:     dimension " << v.kernel_dimension << "  lambda2 " << fmt(v.kernel.residual)
      << "  threshold " << fmt(v.kernel.threshold) << "  " << (v.kernel.pass ? "PASS" : "FAIL")
      << "\n";
  out << "eigenvalues:";
  for (const double e : v.eigenvalues) out << " " << fmt(e);
  out << "\n" << (v.admissible ? "ADMISSIBLE" : "INADMISSIBLE") << "\n";
}

int cmd_validate(const std::string& matrix_path, const Tolerances& tol, std::ostream& out) {
  const ValidationResult result = validate_response(read_matrix(matrix_path), tol);
  print_verdict(result.verdict, out);
  return result.verdict.admissible ? kExitOk : kExitRejected;
}

int cmd_synthesize(const std::string& matrix_path, const std::string& out_path, bool minimize,
                   const Tolerances& tol, std::ostream& out, std::ostream& err) {
  const ValidationResult result = validate_response(read_matrix(matrix_path), tol);
  if (!result.verdict.admissible) {
    err << "input matrix is inadmissible; failed conditions:";
    for (const auto& name : result.verdict.failed_conditions()) err << " [" << name << "]";
    err << "\n";
    return kExitRejected;
  }
  const SynthesisResult synth =
      synthesize_network(*result.response, SynthesisOptions{minimize}, tol);

  std::ostream& info = out_path.empty() ? err : out;
  info << "nodes: " << synth.network.node_count() << " (" << synth.network.boundary_count()
       << " boundary, " << synth.network.interior_count() << " interior)\n";
  info << "edges: " << synth.network.edges().size() << "\n";
  if (synth.plan.interior_count > 0) {
    info << "delta: " << fmt(synth.plan.delta) << "\n";
    info << "epsilon: " << fmt(synth.plan.epsilon) << "\n";
  }
  info << "roundtrip residual: " << fmt(synth.residual) << "\n";

  if (out_path.empty())
    out << network_to_string(synth.network);
  else
    write_network(synth.network, out_path);
  return kExitOk;
}

int cmd_respond(const std::string& network_path, const std::string& out_path,
                const Tolerances& tol, std::ostream& out, std::ostream& err) {
  const Network net = read_network(network_path);
  const ValidationReport report = validate_network(net);
  if (!report.valid()) {
    err << "invalid network:\n";
    for (const auto& violation : report.violations) err << "  " << violation << "\n";
    return kExitRejected;
  }
  const ComplexMatrix r = response_matrix(net, tol);
  if (out_path.empty())
    out << matrix_to_string(r);
  else
    write_matrix(r, out_path);
  return kExitOk;
}

int cmd_solve(const std::string& network_path, const std::string& voltages_path,
              const Tolerances& tol, std::ostream& out, std::ostream& err) {
  const Network net = read_network(network_path);
  const ValidationReport report = validate_network(net);
  if (!report.valid()) {
    err << "invalid network:\n";
    for (const auto& violation : report.violations) err << "  " << violation << "\n";
    return kExitRejected;
  }
  const ComplexVector boundary = read_vector(voltages_path);
  if (boundary.size() != net.boundary_count()) {
    err << "expected " << net.boundary_count() << " boundary voltages, got " << boundary.size()
        << "\n";
    return kExitInput;
  }
  const ComplexVector full = solve_network(net, boundary, tol);
  const ComplexVector currents = boundary_currents(net, full);
  out << "voltages:\n";
  for (std::size_t i = 0; i < full.size(); ++i) out << i << " " << fmt(full[i]) << "\n";
  out << "currents:\n";
  for (std::size_t i = 0; i < currents.size(); ++i) out << i << " " << fmt(currents[i]) << "\n";
  return kExitOk;
}

int cmd_roundtrip(const std::string& matrix_path, const Tolerances& tol, std::ostream& out,
                  std::ostream& err) {
  const ValidationResult result = validate_response(read_matrix(matrix_path), tol);
  if (!result.verdict.admissible) {
    err << "input matrix is inadmissible; failed conditions:";
    for (const auto& name : result.verdict.failed_conditions()) err << " [" << name << "]";
    err << "\n";
    return kExitRejected;
  }
  const SynthesisResult synth = synthesize_network(*result.response, SynthesisOptions{}, tol);
  const double limit = tol.roundtrip * (1.0 + result.response->matrix().max_norm());
  out << "roundtrip residual: " << fmt(synth.residual) << " (tolerance " << fmt(limit) << ")\n";
  return synth.residual <= limit ? kExitOk : kExitInternal;
}

int cmd_gen(std::size_t size, std::uint64_t seed, const std::string& out_path,
            const Tolerances& tol, std::ostream& out) {
  const ResponseMatrix rm = random_admissible(size, seed, tol);
  if (out_path.empty())
    out << matrix_to_string(rm.matrix());
  else
    write_matrix(rm.matrix(), out_path);
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"response maps of alternating-current networks: validate, synthesize, solve"};
  app.require_subcommand(1);

  double tol_override = 0.0;
  const auto add_tol = [&tol_override](CLI::App* cmd) {
    cmd->add_option("--tol", tol_override, "relative tolerance for all checks")
        ->check(CLI::PositiveNumber);
  };
  add_tol(&app);

  std::string matrix_path, network_path, voltages_path, out_path;
  bool minimize = false;
  std::size_t gen_size = 0;
  std::uint64_t gen_seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a matrix for admissibility");
  validate->add_option("matrix", matrix_path, "response matrix file")->required();
  add_tol(validate);

  CLI::App* synthesize = app.add_subcommand("synthesize", "construct a network realizing a matrix");
  synthesize->add_option("matrix", matrix_path, "response matrix file")->required();
  synthesize->add_option("-o,--output", out_path, "network output file (default: stdout)");
  synthesize->add_flag("--minimize-interior", minimize,
                       "drop interior nodes with numerically zero factor columns");
  add_tol(synthesize);

  CLI::App* respond = app.add_subcommand("respond", "compute the response matrix of a network");
  respond->add_option("network", network_path, "network file")->required();
  respond->add_option("-o,--output", out_path, "matrix output file (default: stdout)");
  add_tol(respond);

  CLI::App* solve = app.add_subcommand("solve", "solve for voltages and boundary currents");
  solve->add_option("network", network_path, "network file")->required();
  solve->add_option("--voltages", voltages_path, "boundary voltage vector file")->required();
  add_tol(solve);

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "synthesize, recompute, report residual");
  roundtrip->add_option("matrix", matrix_path, "response matrix file")->required();
  add_tol(roundtrip);

  CLI::App* gen = app.add_subcommand("gen", "write a random admissible matrix");
  gen->add_option("--size", gen_size, "boundary node count (>= 2)")->required();
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("-o,--output", out_path, "matrix output file (default: stdout)");
  add_tol(gen);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  Tolerances tol;
  if (tol_override > 0.0) tol.relative = tol_override;

  try {
    if (app.got_subcommand(validate)) return cmd_validate(matrix_path, tol, out);
    if (app.got_subcommand(synthesize))
      return cmd_synthesize(matrix_path, out_path, minimize, tol, out, err);
    if (app.got_subcommand(respond)) return cmd_respond(network_path, out_path, tol, out, err);
    if (app.got_subcommand(solve)) return cmd_solve(network_path, voltages_path, tol, out, err);
    if (app.got_subcommand(roundtrip)) return cmd_roundtrip(matrix_path, tol, out, err);
    if (app.got_subcommand(gen)) return cmd_gen(gen_size, gen_seed, out_path, tol, out);
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const ShapeError& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    for (const auto& violation : e.report) err << "  " << violation << "\n";
    return kExitRejected;
  } catch (const InadmissibleError& e) {
    err << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;  // unreachable: a subcommand is required
}

}  // namespace acnet
