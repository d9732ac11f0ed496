#pragma once

#include "common.hpp"

namespace wcli {

struct EvalArgs {
    double lambda = -0.5;
    double mu_re = 1.0;
    double mu_im = 0.0;
    double t = 1.0;
    std::string x_spec = "0";
};

struct OracleArgs {
    double lambda = -0.5;
    double mu_re = 1.0;
    double mu_im = 0.0;
    double z_re = 0.0;
    double z_im = 0.0;
    int max_terms = 1000;
};

struct ValidateArgs {
    std::string suite = "closed-forms";
    std::string lambda_spec = "-0.9,-0.7,-0.5,-0.3,-0.1";
    std::string mu_re_spec = "-1,0,0.5,1,2,3";
    std::string mu_im_spec = "-1,0,1";
};

struct DemoArgs {
    std::string problem = "cauchy";
    std::string nu_spec = "0.1,0.3,0.5";
    std::string alpha_spec = "0.5,1,1.5";
    std::string x_spec;  // problem-specific default
    std::string t_spec;
    double t = 1.0;
    double x = 1.0;
    double diffusivity = 1.0;
    double quad_tol = 1e-8;
    double p0 = 1.0, rho = 0.5, a1 = 3.0, a2 = 1.0, k1 = 2.0, k2 = 6.0;
};

int cmd_eval(const EvalArgs& args, const OutputOptions& out);
int cmd_oracle(const OracleArgs& args, const OutputOptions& out);
int cmd_validate(const ValidateArgs& args, const OutputOptions& out);
int cmd_demo(const DemoArgs& args, const OutputOptions& out);

}  // namespace wcli
