#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "wright/series.hpp"

namespace wcli {

int cmd_oracle(const OracleArgs& args, const OutputOptions& out) {
    wright::SeriesResult r;
    try {
        r = wright::wright_series({args.lambda, {args.mu_re, args.mu_im}},
                                  {args.z_re, args.z_im}, out.tol, args.max_terms);
    } catch (const wright::domain_error& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return kExitDomain;
    }

    std::string json = "{\"re\": " + format_double(r.value.real()) +
                       ", \"im\": " + format_double(r.value.imag()) +
                       ", \"terms_used\": " + std::to_string(r.terms_used) +
                       ", \"tail_bound\": " + json_number(r.tail_bound) +
                       ", \"converged\": " + (r.converged ? "true" : "false") + "}\n";
    if (out.out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream file(out.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << out.out_path << "\n";
            return kExitDomain;
        }
        file << json;
    }
    if (!r.converged) {
        std::cerr << "oracle: series not converged within " << args.max_terms
                  << " terms (tail " << format_double(r.tail_bound) << ")\n";
        return kExitNoConvergence;
    }
    return kExitOk;
}

}  // namespace wcli
