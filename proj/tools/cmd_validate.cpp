#include <cfloat>
#include <cmath>
#include <complex>
#include <iostream>

#include "commands.hpp"
#include "wright/closed_forms.hpp"
#include "wright/eval.hpp"
#include "wright/selector.hpp"
#include "wright/series.hpp"

namespace wcli {

namespace {

struct ClosedFormCase {
    const char* name;
    double nu;  // order parameter; lambda = -nu, mu = 1 - nu
    wright::MainardiKind kind;
    double threshold;
};

const ClosedFormCase kClosedFormCases[] = {
    {"M_0", 0.0, wright::MainardiKind::exp0, 1e-12},
    {"M_1/2", 0.5, wright::MainardiKind::gauss_half, 1e-12},
    {"M_1/3", 1.0 / 3.0, wright::MainardiKind::airy_third, 1e-10},
};

double max_rel_err_vs_closed_form(const ClosedFormCase& cfc, const wright::ContourParams* params,
                                  const wright::ToleranceProfile& tol) {
    wright::WrightOrder order{-cfc.nu, {1.0 - cfc.nu, 0.0}};
    double emax = 0.0;
    for (double x = 0.0; x <= 5.0 + 1e-9; x += 0.25) {
        double want = wright::closed_form_mainardi(cfc.kind, x);
        double got = params ? (x == 0.0 ? want : wright::trapezoid_halved_sum(order, {1.0, x}, *params))
                            : wright::wright_eval(order, {1.0, x}, tol).value.real();
        emax = std::max(emax, std::fabs(got - want) / std::fabs(want));
    }
    return emax;
}

int run_closed_forms(const OutputOptions& out, const wright::ToleranceProfile& tol) {
    TableWriter table({"nu", "max_rel_err", "threshold", "pass"}, out);
    bool all_pass = true;
    for (const auto& cfc : kClosedFormCases) {
        double emax = max_rel_err_vs_closed_form(cfc, nullptr, tol);
        bool pass = emax <= cfc.threshold;
        all_pass = all_pass && pass;
        std::cerr << "closed-forms " << cfc.name << ": max_rel_err=" << format_double(emax)
                  << " threshold=" << format_double(cfc.threshold) << (pass ? " PASS" : " FAIL")
                  << "\n";
        table.add_row({cfc.nu, emax, cfc.threshold, pass ? 1.0 : 0.0});
    }
    if (!table.finish()) return kExitDomain;
    return all_pass ? kExitOk : kExitThreshold;
}

int run_convergence(const OutputOptions& out, const wright::ToleranceProfile& tol) {
    TableWriter table({"nu", "n_nodes", "max_rel_err"}, out);
    bool all_pass = true;
    for (const auto& cfc : kClosedFormCases) {
        wright::ContourParams selected = wright::select_contour({1.0 - cfc.nu, 0.0}, 1.0, tol);
        double err_at_selected = 0.0, err_at_half = 0.0;
        for (int n = 2; n <= selected.n_nodes; ++n) {
            wright::ContourParams p =
                wright::rebalanced_contour(n, selected.c, selected.xi, 1.0, tol);
            double emax = max_rel_err_vs_closed_form(cfc, &p, tol);
            table.add_row({cfc.nu, static_cast<double>(n), emax});
            if (n == selected.n_nodes) err_at_selected = emax;
            if (n == (selected.n_nodes + 1) / 2) err_at_half = emax;
        }
        bool pass = err_at_selected <= cfc.threshold && err_at_half > err_at_selected;
        all_pass = all_pass && pass;
        std::cerr << "convergence " << cfc.name << ": err(N)=" << format_double(err_at_selected)
                  << " err(N/2)=" << format_double(err_at_half) << (pass ? " PASS" : " FAIL")
                  << "\n";
    }
    if (!table.finish()) return kExitDomain;
    return all_pass ? kExitOk : kExitThreshold;
}

int run_params(const OutputOptions& out, const wright::ToleranceProfile& tol) {
    TableWriter table({"mu_re", "c", "n_nodes"}, out);
    bool all_pass = true;
    int prev_n = 0;
    double prev_c = 1.0;
    bool monotone_n = true, monotone_c = true;
    int n_at_half = 0;
    for (double mu_re = -6.0; mu_re <= 40.0 + 1e-9; mu_re += 0.5) {
        wright::ContourParams p = wright::select_contour({mu_re, 0.0}, 1.0, tol);
        table.add_row({mu_re, p.c, static_cast<double>(p.n_nodes)});
        if (mu_re == 0.5) n_at_half = p.n_nodes;
        if (mu_re >= 2.0) {
            if (prev_n > 0) {
                monotone_n = monotone_n && p.n_nodes >= prev_n;
                monotone_c = monotone_c && p.c <= prev_c + 1e-9;
            }
            prev_n = p.n_nodes;
            prev_c = p.c;
        }
    }
    bool ref_ok = n_at_half == 15;
    all_pass = monotone_n && monotone_c && ref_ok;
    std::cerr << "params: N(0.5)=" << n_at_half << " monotone_N=" << monotone_n
              << " monotone_c=" << monotone_c << (all_pass ? " PASS" : " FAIL") << "\n";
    if (!table.finish()) return kExitDomain;
    return all_pass ? kExitOk : kExitThreshold;
}

int run_heatmap(const ValidateArgs& args, const OutputOptions& out,
                const wright::ToleranceProfile& tol) {
    constexpr double kBoxThreshold = 1e-9;
    constexpr int kMaxTerms = 2000;
    constexpr double kSeriesTol = 1e-22;

    std::vector<double> lambdas = parse_value_list(args.lambda_spec);
    std::vector<double> mu_res = parse_value_list(args.mu_re_spec);
    std::vector<double> mu_ims = parse_value_list(args.mu_im_spec);

    TableWriter table({"lambda", "mu_re", "mu_im", "log10_err", "n_oracle_pts"}, out);
    bool all_pass = true;
    for (double lambda : lambdas) {
        for (double mu_re : mu_res) {
            for (double mu_im : mu_ims) {
                std::complex<double> mu{mu_re, mu_im};
                wright::WrightSeries series(lambda, mu, kMaxTerms);
                double num = 0.0, den = 0.0;
                int used = 0;
                for (double x = -5.0; x <= 1e-9; x += 0.25) {
                    wright::SeriesResult oracle = series.eval(-std::fabs(x), kSeriesTol);
                    if (!oracle.converged) continue;  // outside the oracle's validity
                    std::complex<double> got =
                        wright::wright_eval({lambda, mu}, {1.0, x}, tol).value;
                    num += std::norm(got - oracle.value);
                    den += std::norm(oracle.value);
                    ++used;
                }
                double err = used > 0 ? std::sqrt(num / den) : 1.0;
                bool pass = used > 0 && err <= kBoxThreshold;
                all_pass = all_pass && pass;
                if (!pass)
                    std::cerr << "heatmap FAIL box lambda=" << format_double(lambda)
                              << " mu=" << format_double(mu_re) << "+"
                              << format_double(mu_im) << "i err=" << format_double(err)
                              << " pts=" << used << "\n";
                table.add_row({lambda, mu_re, mu_im, std::log10(err),
                               static_cast<double>(used)});
            }
        }
    }
    std::cerr << "heatmap: " << (all_pass ? "PASS" : "FAIL") << " (threshold "
              << format_double(kBoxThreshold) << " norm-wise)\n";
    if (!table.finish()) return kExitDomain;
    return all_pass ? kExitOk : kExitThreshold;
}

}  // namespace

int cmd_validate(const ValidateArgs& args, const OutputOptions& out) {
    try {
        wright::ToleranceProfile tol(DBL_EPSILON, out.tol);
        if (args.suite == "closed-forms") return run_closed_forms(out, tol);
        if (args.suite == "convergence") return run_convergence(out, tol);
        if (args.suite == "params") return run_params(out, tol);
        if (args.suite == "heatmap") return run_heatmap(args, out, tol);
    } catch (const wright::domain_error& e) {
        std::cerr << "validate: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validate: " << e.what() << "\n";
        return kExitParse;
    }
    std::cerr << "validate: unknown suite (closed-forms|heatmap|convergence|params)\n";
    return kExitParse;
}

}  // namespace wcli
