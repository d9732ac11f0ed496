#include <cmath>
#include <iostream>

#include "commands.hpp"
#include "wright/pde.hpp"

namespace wcli {

namespace {

int run_cauchy(const DemoArgs& args, const OutputOptions& out) {
    std::vector<double> nus = parse_value_list(args.nu_spec);
    for (double nu : nus) {
        if (!(nu > 0.0) || !(nu <= 0.5)) {
            std::cerr << "demo cauchy: nu must lie in (0, 1/2] (diffusion regime)\n";
            return kExitDomain;
        }
    }
    // the window, size and datum of the reference setup: square pulse of
    // amplitude one on [-1,1], 256 cells on [-5,5)
    const int n = 256;
    const double dx = 10.0 / n;
    wright::GridFunction g = wright::GridFunction::zeros(-5.0, dx, n);
    for (int i = 0; i < n; ++i) g.values[size_t(i)] = std::fabs(g.x(i)) <= 1.0 ? 1.0 : 0.0;

    std::vector<std::string> cols{"x", "g"};
    std::vector<wright::pde::CauchySolution> sols;
    for (double nu : nus) {
        cols.push_back("u_nu" + format_double(nu));
        sols.push_back(
            wright::pde::cauchy_solve({nu, args.diffusivity, g, std::nullopt}, args.t));
        if (sols.back().decay_warning)
            std::cerr << "demo cauchy: kernel not decayed at the window edges for nu="
                      << format_double(nu) << ", wrap-around dominates there\n";
    }
    TableWriter table(cols, out);
    for (int i = 0; i < n; ++i) {
        std::vector<double> row{g.x(i), g.values[size_t(i)]};
        for (const auto& s : sols) row.push_back(s.u.values[size_t(i)]);
        table.add_row(row);
    }
    return table.finish() ? kExitOk : kExitDomain;
}

int run_signalling(const DemoArgs& args, const OutputOptions& out) {
    std::vector<double> ts = parse_value_list(args.t_spec.empty() ? "0.1:0.1:2" : args.t_spec);
    std::vector<double> nus = parse_value_list(args.nu_spec);
    if (nus.size() != 1) {
        std::cerr << "demo signalling: exactly one nu value is expected\n";
        return kExitParse;
    }
    wright::pde::SignallingSolution sol = wright::pde::signalling_solve(
        [](double) { return 1.0; }, nus.front(), args.diffusivity, args.x, ts, args.quad_tol);
    if (!sol.tolerance_met)
        std::cerr << "demo signalling: quadrature tolerance not met at the panel cap\n";
    TableWriter table({"t", "u"}, out);
    for (size_t i = 0; i < ts.size(); ++i) table.add_row({ts[i], sol.values[i]});
    return table.finish() ? kExitOk : kExitDomain;
}

int run_tworod(const DemoArgs& args, const OutputOptions& out) {
    std::vector<double> alphas = parse_value_list(args.alpha_spec);
    std::vector<double> xs = parse_value_list(args.x_spec.empty() ? "-5:0.05:5" : args.x_spec);

    std::vector<std::string> cols{"x"};
    std::vector<wright::pde::TwoRodConfig> cfgs;
    for (double alpha : alphas) {
        cols.push_back("T_alpha" + format_double(alpha));
        cfgs.push_back(wright::pde::TwoRodConfig::make(args.p0, args.rho, args.a1, args.a2,
                                                       args.k1, args.k2, alpha));
        if (alpha == 2.0)
            std::cerr << "demo tworod: alpha=2 clamps the Wright order to the admissible "
                         "boundary; treat the output as qualitative\n";
    }
    TableWriter table(cols, out);
    for (double x : xs) {
        std::vector<double> row{x};
        for (const auto& cfg : cfgs) row.push_back(wright::pde::tworod_solve(cfg, x, args.t));
        table.add_row(row);
    }
    return table.finish() ? kExitOk : kExitDomain;
}

}  // namespace

int cmd_demo(const DemoArgs& args, const OutputOptions& out) {
    try {
        if (args.problem == "cauchy") return run_cauchy(args, out);
        if (args.problem == "signalling") return run_signalling(args, out);
        if (args.problem == "tworod") return run_tworod(args, out);
    } catch (const wright::domain_error& e) {
        std::cerr << "demo: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "demo: " << e.what() << "\n";
        return kExitParse;
    }
    std::cerr << "demo: unknown problem (cauchy|signalling|tworod)\n";
    return kExitParse;
}

}  // namespace wcli
