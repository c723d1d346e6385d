#include "verlinde/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_surface_options(CLI::App* app, verlinde::RunConfig& cfg)
{
    app->add_option("--lattice", cfg.lattice, "lattice file or builtin name (k3, k3-blowup, quintic, ...)");
    app->add_option("--L", cfg.L, "line bundle class, e.g. 1,1,0,0");
    app->add_option("--c1", cfg.c1, "first Chern class, e.g. 1,0,0,0");
    app->add_option("--max-vd", cfg.max_vd, "largest virtual dimension");
}

} // namespace

int main(int argc, char** argv)
{
    verlinde::RunConfig cfg;
    CLI::App app{"Virtual chi_y-genera of sheaf moduli on surfaces through toric localization"};
    app.require_subcommand(1);
    app.add_option("--seed", cfg.seed, "seed for the eps specialization");
    app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    app.add_option("--cache-dir", cfg.cache_dir, "cache directory for universal series");

    CLI::App* uni = app.add_subcommand("universal", "compute the universal series A or B");
    uni->add_option("kind", cfg.kind, "inst or mono")->required();
    uni->add_option("--order", cfg.order, "q order");
    uni->add_option("--s-order", cfg.s_order, "s order for inst (default 2 * order)");
    uni->add_option("--format", cfg.format, "table or json");

    CLI::App* ver = app.add_subcommand("verify", "compare localization against the closed formulas");
    ver->add_option("target", cfg.target, "conj1 conj2 conj3 thm2 closed-forms limits blowup apps")->required();
    add_surface_options(ver, cfg);
    ver->add_flag("--strong-form", cfg.strong_form, "use the strong form of the universal structure");
    ver->add_option("--order", cfg.order, "q order (default: what max-vd needs)");
    ver->add_option("--s-order", cfg.s_order, "s order (default: what max-vd needs)");

    CLI::App* tab = app.add_subcommand("table", "print coefficients of a closed formula");
    add_surface_options(tab, cfg);
    tab->add_option("--formula", cfg.formula, "conj1 conj2 conj3 gn");
    tab->add_option("--lambda", cfg.lambda, "rational parameter of gn");
    tab->add_option("--format", cfg.format, "table or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return verlinde::kExitConfig;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        return verlinde::run_command(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verlinde::kExitConfig;
    }
}
