#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "hesnil/corpus.hpp"
#include "hesnil/error.hpp"
#include "hesnil/inversion.hpp"
#include "hesnil/nilpotency.hpp"
#include "hesnil/poly_io.hpp"
#include "hesnil/vanishing.hpp"

namespace {

using hesnil::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw hesnil::DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json poly_list(const std::vector<hesnil::Poly>& polys, hesnil::VarStyle style) {
  Json out = Json::array();
  for (const hesnil::Poly& p : polys) out.push_back(hesnil::format_poly(p, style));
  return out;
}

int check_hn(const std::string& file, std::optional<std::size_t> arity) {
  const hesnil::ParsedPoly in = hesnil::parse_poly_with_style(read_input(file), arity);
  const hesnil::HNReport rep = hesnil::is_hn(in.poly);
  Json j;
  j["arity"] = rep.arity;
  j["is_hn"] = rep.is_hn();
  j["verdict_matrix"] = rep.verdict_matrix;
  j["verdict_laplacian"] = rep.verdict_laplacian;
  j["low_order"] = rep.low_order;
  j["traces"] = poly_list(rep.traces, in.style);
  j["laplacians"] = poly_list(rep.laplacians, in.style);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int invert(const std::string& file, const std::string& method_name, std::size_t t_order,
           std::optional<unsigned> z_degree, std::optional<std::size_t> arity) {
  const hesnil::ParsedPoly in = hesnil::parse_poly_with_style(read_input(file), arity);
  const hesnil::InversionMethod method = hesnil::inversion_method_from_string(method_name);
  hesnil::DeformedPair pair{in.poly, hesnil::TGraded(in.poly.arity(), 0), method};
  switch (method) {
    case hesnil::InversionMethod::kGeneral:
      pair = hesnil::invert_general(in.poly, t_order);
      break;
    case hesnil::InversionMethod::kHnRecurrence:
      pair = hesnil::invert_hn(in.poly, t_order);
      break;
    case hesnil::InversionMethod::kClosedForm:
      pair = hesnil::invert_closed(in.poly, t_order);
      break;
    case hesnil::InversionMethod::kFixedPoint:
      // grad Q_[m] has degree one less than Q_[m].
      pair = hesnil::pair_from_fixed_point(
          in.poly, hesnil::invert_fixed_point(in.poly, t_order,
                                              z_degree ? std::optional<unsigned>(*z_degree > 0 ? *z_degree - 1 : 0)
                                                       : std::nullopt));
      break;
  }
  if (z_degree) pair.q = pair.q.truncated(pair.q.t_order(), *z_degree);
  for (std::size_t m = 0; m < pair.q.t_order(); ++m) {
    std::cout << "Q[" << m + 1 << "] = " << hesnil::format_poly(pair.q[m], in.style) << '\n';
  }
  Json summary;
  summary["method"] = hesnil::to_string(method);
  summary["t_order"] = t_order;
  if (z_degree) summary["z_degree"] = *z_degree;
  summary["deg_t"] = pair.deg_t();
  const auto first = pair.first_vanishing_index();
  summary["first_vanishing_index"] = first ? Json(*first) : Json(nullptr);
  std::cout << summary.dump() << '\n';
  return 0;
}

int generate(const std::string& kind, std::size_t n, unsigned d, std::uint64_t seed,
             const std::string& params) {
  const Json p = params.empty() ? Json::object() : Json::parse(params);
  const hesnil::GeneratedPoly g = hesnil::generate_polynomial(kind, n, d, seed, p);
  std::cout << hesnil::format_poly(g.p, g.style) << '\n' << g.provenance.dump(2) << '\n';
  return 0;
}

int vanishing(const std::string& config_path) {
  const Json j = Json::parse(read_input(config_path));
  const hesnil::ExperimentConfig cfg = hesnil::ExperimentConfig::from_json(j);
  const auto reports = hesnil::run_vanishing(cfg);
  if (cfg.out.empty()) {
    hesnil::emit_report(reports, cfg.format, cfg.t_order, std::cout);
  } else {
    hesnil::emit_report(reports, cfg.format, cfg.t_order, cfg.out);
  }
  const int code = hesnil::exit_code(reports);
  std::cerr << reports.size() << " trial(s); "
            << (code == 0 ? "all checks passed"
                          : code == 2 ? "a theorem-level check FAILED"
                                      : "a vanishing beyond the bound was flagged")
            << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hessian-nilpotent polynomial toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::size_t> arity;

  auto* check = app.add_subcommand("check-hn", "Decide Hessian nilpotency two ways");
  check->add_option("file", file, "Polynomial text file ('-' for stdin)")->required();
  check->add_option("--arity", arity, "Number of variables");

  std::string method = "general";
  std::size_t t_order = 4;
  std::optional<unsigned> z_degree;
  auto* inv = app.add_subcommand("invert", "Compute the deformed inversion pair Q[1..M]");
  inv->add_option("file", file, "Polynomial text file ('-' for stdin)")->required();
  inv->add_option("--method", method, "general | hn | closed | fixed-point")
      ->check(CLI::IsMember({"general", "hn", "closed", "fixed-point"}));
  inv->add_option("--t-order", t_order, "Number of coefficients M")->check(CLI::PositiveNumber);
  inv->add_option("--z-degree", z_degree, "Truncate coefficients to this total degree");
  inv->add_option("--arity", arity, "Number of variables");

  std::string kind;
  std::size_t n = 0;
  unsigned d = 0;
  std::uint64_t seed = 0;
  std::string params;
  auto* gen = app.add_subcommand("generate", "Build an HN polynomial from a named construction");
  gen->add_option("--kind", kind, "w | wtilde | ug | pg | ph")
      ->required()
      ->check(CLI::IsMember({"w", "wtilde", "ug", "pg", "ph"}));
  gen->add_option("--n", n, "Arity of the result")->required();
  gen->add_option("--d", d, "Degree")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--params", params, "Extra generator parameters as a JSON object");

  std::string config;
  auto* van = app.add_subcommand("vanishing", "Run a vanishing experiment from a JSON config");
  van->add_option("--config", config, "Config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return check_hn(file, arity);
    if (*inv) return invert(file, method, t_order, z_degree, arity);
    if (*gen) return generate(kind, n, d, seed, params);
    if (*van) return vanishing(config);
  } catch (const hesnil::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
