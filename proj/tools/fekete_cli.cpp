#include "fekete/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using fekete::cli::Format;
using fekete::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Critical configurations of the logarithmic Fekete problem for few points"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  std::string cache_dir;

  const std::map<std::string, Format> formats = {{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub, bool n_required) {
    auto* opt = sub->add_option("--n", cfg.n, "number of points");
    if (n_required) opt->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--precision", cfg.precision, "bits for certified enclosures")->check(CLI::Range(16u, 4096u));
    sub->add_option("--cache-dir", cache_dir, "Groebner basis cache (default $FEKETE_CACHE_DIR)");
  };
  auto groebner_opts = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget_seconds, "time budget in seconds (default 60 for n=4, 1800 for n=5)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--memory", cfg.memory_mb, "approximate memory budget in MB")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-long", cfg.allow_long, "permit runs for n >= 6");
  };
  auto selector = [&](CLI::App* sub) {
    auto* c = sub->add_option("--config", cfg.config, "catalog name, e.g. three3");
    sub->add_option("--file", cfg.file, "candidate JSON file")->check(CLI::ExistingFile)->excludes(c);
  };

  auto* system = app.add_subcommand("system", "print the polynomial system");
  common(system, true);

  auto* groebner = app.add_subcommand("groebner", "Groebner basis and ideal degree");
  common(groebner, true);
  groebner_opts(groebner);
  groebner->add_option("--expected-degree", cfg.expected_degree, "compare against this degree");
  groebner->add_option("--univariate", cfg.univariate, "also print the minimal polynomial of this variable");

  auto* verify = app.add_subcommand("verify", "exact verification of candidates");
  common(verify, false);
  selector(verify);
  verify->add_flag("--multiplicity", cfg.multiplicity, "report the Jacobian rank at each candidate");

  auto* orbits = app.add_subcommand("orbits", "stabilizer and orbit sizes");
  common(orbits, false);
  selector(orbits);

  auto* census = app.add_subcommand("census", "orbit census against the ideal degree");
  common(census, true);
  groebner_opts(census);
  auto* ed = census->add_option("--expected-degree", cfg.expected_degree, "expected degree");
  census->add_flag("--from-groebner", cfg.from_groebner, "take the expected degree from a Groebner run")->excludes(ed);

  auto* geometry = app.add_subcommand("geometry", "Gram spectra and embeddings");
  common(geometry, false);
  selector(geometry);
  geometry->add_option("--embed", cfg.embed, "ambient dimension for coordinates")->check(CLI::Range(1, 16));

  auto* classify = app.add_subcommand("classify", "projected Hessian classification");
  common(classify, false);
  selector(classify);
  classify->add_option("--d", cfg.d, "ambient dimension (sphere S^{d-1})")->check(CLI::Range(2, 16));
  classify->add_flag("--emit-spectra", cfg.emit_spectra, "append Hessian spectra");

  auto* report = app.add_subcommand("report", "all tables for one n");
  common(report, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fekete::cli::kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = formats.at(format);
  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  if (cfg.n == 0 && cfg.config.empty() && cfg.file.empty()) {
    std::cerr << "give --n, --config or --file\n";
    return fekete::cli::kUsage;
  }

  try {
    const auto out = fekete::cli::dispatch(cfg);
    fekete::cli::render(out, cfg.format, std::cout);
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fekete::cli::kUsage;
  }
}
