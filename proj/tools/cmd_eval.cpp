#include <cfloat>
#include <iostream>

#include "commands.hpp"
#include "wright/eval.hpp"

namespace wcli {

int cmd_eval(const EvalArgs& args, const OutputOptions& out) {
    std::vector<double> xs;
    try {
        xs = parse_value_list(args.x_spec);
    } catch (const std::exception& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kExitParse;
    }

    TableWriter table(
        {"lambda", "mu_re", "mu_im", "t", "x", "re", "im", "est_roundoff", "n_nodes"}, out);
    try {
        wright::WrightOrder order{args.lambda, {args.mu_re, args.mu_im}};
        wright::ToleranceProfile tol(DBL_EPSILON, out.tol);
        bool warned = false;
        for (double x : xs) {
            wright::EvalResult r = wright::wright_eval(order, {args.t, x}, tol);
            if (r.accuracy_warning && !warned) {
                std::cerr << "eval: |Im mu| > 5, roundoff bound grows like e^{2 pi Im mu}\n";
                warned = true;
            }
            table.add_row({args.lambda, args.mu_re, args.mu_im, args.t, x, r.value.real(),
                           r.value.imag(), r.est_roundoff,
                           static_cast<double>(r.contour.n_nodes)});
        }
    } catch (const wright::domain_error& e) {
        std::cerr << "eval: " << e.what() << "\n";
        return kExitDomain;
    }
    return table.finish() ? kExitOk : kExitDomain;
}

}  // namespace wcli
