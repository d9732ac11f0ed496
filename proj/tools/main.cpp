// Command line front end for the Wright function library: point evaluation,
// validation sweeps, and Green's-function demos, emitting CSV or JSON.

#include <CLI11.hpp>

#include "commands.hpp"
#include "common.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Wright function of the second kind: evaluation, validation and "
                 "fractional-diffusion demos"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    wcli::OutputOptions out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");
    app.add_option("--tol", out.tol, "target accuracy epsilon")->capture_default_str();

    wcli::EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate f_{lambda,mu}(t;x)");
    eval->add_option("--lambda", eval_args.lambda, "order lambda in (-1,0), or 0")->required();
    eval->add_option("--mu", eval_args.mu_re, "Re(mu)")->required();
    eval->add_option("--mu-im", eval_args.mu_im, "Im(mu)")->capture_default_str();
    eval->add_option("--t", eval_args.t, "time, t > 0")->capture_default_str();
    eval->add_option("--x", eval_args.x_spec, "x values: single, comma list, or start:step:stop")
        ->required();

    wcli::OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "truncated series reference value");
    oracle->add_option("--lambda", oracle_args.lambda, "order lambda > -1")->required();
    oracle->add_option("--mu", oracle_args.mu_re, "Re(mu)")->required();
    oracle->add_option("--mu-im", oracle_args.mu_im, "Im(mu)")->capture_default_str();
    oracle->add_option("--z-re", oracle_args.z_re, "Re(z)")->required();
    oracle->add_option("--z-im", oracle_args.z_im, "Im(z)")->capture_default_str();
    oracle->add_option("--max-terms", oracle_args.max_terms, "series length cap")
        ->capture_default_str();

    wcli::ValidateArgs validate_args;
    CLI::App* validate = app.add_subcommand("validate", "accuracy validation sweeps");
    validate->add_option("--suite", validate_args.suite,
                         "closed-forms | heatmap | convergence | params")
        ->required();
    validate->add_option("--lambdas", validate_args.lambda_spec, "heatmap lambda grid")
        ->capture_default_str();
    validate->add_option("--mu-res", validate_args.mu_re_spec, "heatmap Re(mu) grid")
        ->capture_default_str();
    validate->add_option("--mu-ims", validate_args.mu_im_spec, "heatmap Im(mu) grid")
        ->capture_default_str();

    wcli::DemoArgs demo_args;
    CLI::App* demo = app.add_subcommand("demo", "fractional evolution problems");
    demo->add_option("--problem", demo_args.problem, "cauchy | signalling | tworod")->required();
    CLI::Option* nu_opt =
        demo->add_option("--nu", demo_args.nu_spec, "order list (cauchy) or value (signalling)");
    demo->add_option("--alpha", demo_args.alpha_spec, "two-rod alpha list")->capture_default_str();
    demo->add_option("--t", demo_args.t, "evaluation time (cauchy, tworod)")
        ->capture_default_str();
    demo->add_option("--t-grid", demo_args.t_spec, "signalling time grid (start:step:stop)");
    demo->add_option("--x", demo_args.x, "signalling observation point")->capture_default_str();
    demo->add_option("--x-grid", demo_args.x_spec, "two-rod x grid (start:step:stop)");
    demo->add_option("--d", demo_args.diffusivity, "diffusivity D")->capture_default_str();
    demo->add_option("--quad-tol", demo_args.quad_tol, "signalling quadrature tolerance")
        ->capture_default_str();
    demo->add_option("--p0", demo_args.p0, "two-rod pulse strength")->capture_default_str();
    demo->add_option("--rho", demo_args.rho, "two-rod pulse location")->capture_default_str();
    demo->add_option("--a1", demo_args.a1, "two-rod diffusivity, right rod")
        ->capture_default_str();
    demo->add_option("--a2", demo_args.a2, "two-rod diffusivity, left rod")
        ->capture_default_str();
    demo->add_option("--k1", demo_args.k1, "two-rod conductivity, right rod")
        ->capture_default_str();
    demo->add_option("--k2", demo_args.k2, "two-rod conductivity, left rod")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return wcli::kExitParse;
    }

    if (eval->parsed()) return wcli::cmd_eval(eval_args, out);
    if (oracle->parsed()) return wcli::cmd_oracle(oracle_args, out);
    if (validate->parsed()) return wcli::cmd_validate(validate_args, out);
    if (demo->parsed()) {
        if (demo_args.problem == "signalling" && nu_opt->count() == 0) demo_args.nu_spec = "0.5";
        return wcli::cmd_demo(demo_args, out);
    }
    return wcli::kExitParse;
}
