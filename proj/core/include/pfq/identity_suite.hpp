#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pfq/series.hpp"

namespace pfq {

/// Flat parameter record for one grid point; list-valued entries (e.g. the
/// upper/lower parameter lists) hold more than one number.
using ParamRecord = std::map<std::string, std::vector<double>>;

enum class LhsSource { quadrature, series };

struct IdentityReport {
    std::string identity_id;
    ParamRecord params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    LhsSource lhs_source = LhsSource::series;
};

/// Builds the report and applies the pass rule: rel_diff <= tolerance, or
/// abs_diff <= tolerance when |rhs| < 1e-12.
IdentityReport make_identity_report(std::string id, ParamRecord params,
                                    double lhs, double rhs, double tolerance,
                                    LhsSource source);

struct IdentityCase {
    std::string id;
    std::vector<ParamRecord> grid;
    double tolerance = 0.0;
};

struct IdentitySuite {
    std::vector<IdentityCase> identities;
};

using IdentityCheck =
    std::function<IdentityReport(const ParamRecord&, double tolerance)>;

/// All implemented identity checks, keyed by identity id.
const std::map<std::string, IdentityCheck>& identity_registry();

/// Runs every identity over its grid. Unknown ids throw DomainError; a check
/// that throws at a grid point is reported as a failed row with NaN values.
std::vector<IdentityReport> run_suite(const IdentitySuite& suite);

/// The bundled verification suite: every closed form paired with its
/// quadrature or series oracle over a fixed grid.
IdentitySuite default_suite();

std::string format_params(const ParamRecord& params);

/// CSV with header identity_id,params,lhs,rhs,rel_diff,passed.
std::string to_csv(const std::vector<IdentityReport>& reports);

namespace oracle {

/// 2F1(a, b; c; -t) for t >= 0, reached through the Pfaff reflection
/// (1+t)^{-a} 2F1(a, c-b; c; t/(1+t)) so the whole half-line is covered.
double hyp2f1_at_negative(double a, double b, double c, double t);

/// 0F1(-; b; w) for any real w; large negative arguments switch to the
/// cylinder-function form Gamma(b) y^{-(b-1)/2} J_{b-1}(2 sqrt(y)), y = -w,
/// which stays well-conditioned where the raw series cancels catastrophically.
double hyp0f1_entire(double b, double w);

}  // namespace oracle

}  // namespace pfq
