// pfq: evaluate generalized hypergeometric quantities and verify the bundled
// closed-form identity suite.
//
// Exit codes: 0 success, 2 usage/parse error, 3 domain error,
// 4 no convergence, 5 verification failures.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfq/errors.hpp"
#include "pfq/identity_suite.hpp"
#include "pfq/integrals.hpp"
#include "pfq/odes.hpp"
#include "pfq/special.hpp"
#include "pfq/umbral.hpp"

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliOptions {
    std::vector<double> upper;
    std::vector<double> lower;
    std::vector<pfq::WeightedParam> upper_weighted;
    std::vector<pfq::WeightedParam> lower_weighted;
    std::map<std::string, double> scalars;
    pfq::SeriesControl control;
};

struct FunctionResult {
    double value = 0.0;
    int terms_used = -1;  // negative: no series metadata
    double tail_estimate = 0.0;
};

FunctionResult from_eval(const pfq::EvalResult& r) {
    return {r.value, r.terms_used, r.tail_estimate};
}

double need(const CliOptions& options, const std::string& key) {
    const auto it = options.scalars.find(key);
    if (it == options.scalars.end())
        throw UsageError("missing required option --" + key);
    return it->second;
}

using Handler = std::function<FunctionResult(const CliOptions&)>;

struct FunctionSpec {
    Handler handler;
    const char* abscissa;  // option swept by `table`, nullptr if not tableable
};

const std::map<std::string, FunctionSpec>& function_table() {
    using namespace pfq;
    static const std::map<std::string, FunctionSpec> table{
        {"pfq",
         {[](const CliOptions& o) {
              return from_eval(eval_pfq({o.upper, o.lower}, need(o, "x"),
                                        o.control));
          },
          "x"}},
        {"umbral_exp",
         {[](const CliOptions& o) {
              return from_eval(umbral_exp_eval(UmbralSymbol(o.upper, o.lower),
                                               need(o, "x"), o.control));
          },
          "x"}},
        {"fox_wright",
         {[](const CliOptions& o) {
              return from_eval(eval_fox_wright(
                  {o.upper_weighted, o.lower_weighted}, need(o, "x"),
                  o.control));
          },
          "x"}},
        {"appell",
         {[](const CliOptions& o) {
              return from_eval(eval_appell(
                  need(o, "alpha"), need(o, "gamma"), need(o, "beta"),
                  need(o, "beta-prime"), need(o, "x"), need(o, "y"),
                  o.control));
          },
          nullptr}},
        {"mellin",
         {[](const CliOptions& o) {
              return FunctionResult{mellin_integral(need(o, "a"), need(o, "b"),
                                                    need(o, "c"),
                                                    need(o, "nu"))};
          },
          nullptr}},
        {"power_mellin",
         {[](const CliOptions& o) {
              return FunctionResult{mellin_power_integral(
                  need(o, "a"), need(o, "b"), need(o, "c"), need(o, "mu"),
                  need(o, "nu"))};
          },
          nullptr}},
        {"gaussian_pfq",
         {[](const CliOptions& o) {
              const auto reduction = gaussian_integral_pfq(
                  {o.upper, o.lower}, need(o, "alpha"), need(o, "beta"));
              return FunctionResult{reduction.value(o.control)};
          },
          nullptr}},
        {"gaussian_cosine",
         {[](const CliOptions& o) {
              return FunctionResult{gaussian_cosine_integral(
                  need(o, "alpha"), need(o, "beta"), o.control)};
          },
          nullptr}},
        {"gaussian_quadratic",
         {[](const CliOptions& o) {
              return FunctionResult{gaussian_quadratic_arg_integral(
                  need(o, "a"), need(o, "b"), need(o, "c"), need(o, "alpha"),
                  need(o, "beta"), o.control)};
          },
          nullptr}},
        {"geometric_gaussian",
         {[](const CliOptions& o) {
              return FunctionResult{geometric_gaussian_integral(
                  need(o, "alpha"), need(o, "beta"))};
          },
          nullptr}},
        {"weighted_exp",
         {[](const CliOptions& o) {
              return FunctionResult{weighted_exp_integral(
                  need(o, "a"), need(o, "b"), need(o, "c"), need(o, "alpha"),
                  need(o, "x"), o.control)};
          },
          "x"}},
        {"bessel_squared_gaussian",
         {[](const CliOptions& o) {
              return FunctionResult{
                  bessel_squared_gaussian_integral(need(o, "alpha"), o.control)};
          },
          nullptr}},
        {"fox_wright_gaussian",
         {[](const CliOptions& o) {
              return FunctionResult{fox_wright_gaussian_form(
                  need(o, "a"), need(o, "b"), need(o, "c"), need(o, "alpha"),
                  need(o, "beta"), o.control)};
          },
          nullptr}},
        {"euler_1f1",
         {[](const CliOptions& o) {
              return FunctionResult{
                  euler_integral_1f1(need(o, "a"), need(o, "b"), need(o, "x"))};
          },
          "x"}},
        {"euler_2f1",
         {[](const CliOptions& o) {
              return FunctionResult{euler_integral_2f1(
                  need(o, "a"), need(o, "b"), need(o, "c"), need(o, "x"))};
          },
          "x"}},
        {"kummer_gauss",
         {[](const CliOptions& o) {
              return FunctionResult{kummer_gauss_transform(
                  need(o, "a"), need(o, "b"), need(o, "alpha"),
                  need(o, "beta"))};
          },
          nullptr}},
        {"bessel_j0",
         {[](const CliOptions& o) {
              return FunctionResult{bessel_j0(need(o, "x"), o.control)};
          },
          "x"}},
        {"tricomi",
         {[](const CliOptions& o) {
              return FunctionResult{
                  tricomi_c(need(o, "nu"), need(o, "x"), o.control)};
          },
          "x"}},
        {"cos_hyp",
         {[](const CliOptions& o) {
              return FunctionResult{cos_hyp(need(o, "x"), o.control)};
          },
          "x"}},
        {"sin_hyp",
         {[](const CliOptions& o) {
              return FunctionResult{sin_hyp(need(o, "x"), o.control)};
          },
          "x"}},
        {"cos_half",
         {[](const CliOptions& o) {
              return FunctionResult{cos_half(need(o, "x"), o.control)};
          },
          "x"}},
        {"cos_transform",
         {[](const CliOptions& o) {
              return FunctionResult{
                  gauss_transform_cos_half(need(o, "x"), o.control)};
          },
          "x"}},
        {"j0_squared",
         {[](const CliOptions& o) {
              return FunctionResult{j0_squared(need(o, "x"), o.control)};
          },
          "x"}},
        {"landau",
         {[](const CliOptions& o) {
              return FunctionResult{
                  landau_radial({need(o, "lambda"), need(o, "m-l")},
                                need(o, "xi"), o.control)};
          },
          "xi"}},
    };
    return table;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    if (text.empty()) return values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + item + "' as a number");
        }
    }
    return values;
}

// Fox-Wright entries: value[:step], comma separated, step defaults to 1.
std::vector<pfq::WeightedParam> parse_weighted(const std::string& text) {
    std::vector<pfq::WeightedParam> entries;
    if (text.empty()) return entries;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        pfq::WeightedParam entry;
        const std::size_t colon = item.find(':');
        try {
            entry.value = std::stod(item.substr(0, colon));
            entry.step = colon == std::string::npos
                             ? 1.0
                             : std::stod(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("cannot parse Fox-Wright entry '" + item + "'");
        }
        entries.push_back(entry);
    }
    return entries;
}

std::string format_value(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

FunctionResult evaluate_function(const std::string& name,
                                 const CliOptions& options) {
    const auto& table = function_table();
    const auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown function '" + name + "'");
    return it->second.handler(options);
}

int run_eval(const std::string& name, const CliOptions& options) {
    const FunctionResult result = evaluate_function(name, options);
    std::printf("%s\n", format_value(result.value).c_str());
    if (result.terms_used >= 0)
        std::printf("terms_used=%d tail_estimate=%s\n", result.terms_used,
                    format_value(result.tail_estimate).c_str());
    return 0;
}

int run_table(const std::string& name, const CliOptions& options, double from,
              double to, double step) {
    if (!(step > 0.0) || !(from < to))
        throw UsageError("table range requires from < to and step > 0");
    const auto& table = function_table();
    const auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown function '" + name + "'");
    if (it->second.abscissa == nullptr)
        throw UsageError("function '" + name + "' has no sweep variable");

    const long steps = static_cast<long>((to - from) / step + 1e-6);
    std::printf("x,value,terms_used\n");
    for (long k = 0; k <= steps; ++k) {
        const double x = from + k * step;
        CliOptions point = options;
        point.scalars[it->second.abscissa] = x;
        const FunctionResult result = evaluate_function(name, point);
        std::printf("%s,%s,%d\n", format_value(x).c_str(),
                    format_value(result.value).c_str(),
                    result.terms_used >= 0 ? result.terms_used : 0);
    }
    return 0;
}

pfq::IdentitySuite parse_suite_json(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw UsageError("cannot open suite file '" + path + "'");
    nlohmann::json document;
    try {
        stream >> document;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("suite JSON parse error: ") + e.what());
    }
    pfq::IdentitySuite suite;
    try {
        if (!document.is_object() || !document.contains("identities") ||
            !document["identities"].is_array())
            throw UsageError("suite JSON must hold an 'identities' array");
        for (const auto& entry : document["identities"]) {
            pfq::IdentityCase identity;
            identity.id = entry.at("id").get<std::string>();
            identity.tolerance = entry.at("tolerance").get<double>();
            for (const auto& point : entry.at("grid")) {
                if (!point.is_object())
                    throw UsageError("grid entries must be objects");
                pfq::ParamRecord record;
                for (const auto& [key, value] : point.items()) {
                    if (value.is_array())
                        record[key] = value.get<std::vector<double>>();
                    else
                        record[key] = {value.get<double>()};
                }
                identity.grid.push_back(std::move(record));
            }
            suite.identities.push_back(std::move(identity));
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed suite: ") + e.what());
    }
    return suite;
}

int run_verify(const std::optional<std::string>& suite_path,
               const std::optional<std::string>& output_path) {
    pfq::IdentitySuite suite;
    if (suite_path)
        suite = parse_suite_json(*suite_path);
    else
        suite = pfq::default_suite();

    std::vector<pfq::IdentityReport> reports;
    try {
        reports = pfq::run_suite(suite);
    } catch (const pfq::DomainError& e) {
        // Unknown identity ids mean the suite document itself is invalid.
        throw UsageError(e.what());
    }
    const std::string csv = pfq::to_csv(reports);
    if (output_path) {
        std::ofstream out(*output_path);
        if (!out) throw UsageError("cannot write '" + *output_path + "'");
        out << csv;
    } else {
        std::fputs(csv.c_str(), stdout);
    }
    std::size_t passed = 0;
    for (const auto& report : reports) passed += report.passed ? 1 : 0;
    std::printf("%zu passed / %zu total\n", passed, reports.size());
    return passed == reports.size() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized hypergeometric evaluation and identity "
                 "verification"};
    app.require_subcommand(1);

    std::string function_name;
    std::string upper_text, lower_text;
    CliOptions options;
    std::map<std::string, std::optional<double>> scalar_flags;
    for (const char* key :
         {"x", "y", "a", "b", "c", "nu", "mu", "alpha", "beta", "gamma",
          "beta-prime", "lambda", "m-l", "xi"})
        scalar_flags[key] = std::nullopt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("function", function_name, "function identifier")
            ->required();
        cmd->add_option("--upper", upper_text,
                        "comma-separated upper parameters (value:step for "
                        "fox_wright)");
        cmd->add_option("--lower", lower_text,
                        "comma-separated lower parameters");
        for (auto& [key, slot] : scalar_flags)
            cmd->add_option("--" + key, slot);
        cmd->add_option("--rel-tol", options.control.rel_tol,
                        "series relative tolerance");
        cmd->add_option("--min-terms", options.control.min_terms);
        cmd->add_option("--max-terms", options.control.max_terms);
    };

    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate a function at a point");
    add_common(eval_cmd);

    CLI::App* table_cmd =
        app.add_subcommand("table", "emit a CSV table over a range");
    add_common(table_cmd);
    double from = 0.0, to = 0.0, step = 0.0;
    table_cmd->add_option("--from", from)->required();
    table_cmd->add_option("--to", to)->required();
    table_cmd->add_option("--step", step)->required();

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the identity suite and emit a CSV report");
    std::string suite_path, output_path;
    CLI::Option* suite_opt = verify_cmd->add_option(
        "--suite", suite_path, "suite JSON (defaults to the bundled suite)");
    CLI::Option* output_opt =
        verify_cmd->add_option("--output", output_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        for (const auto& [key, slot] : scalar_flags)
            if (slot) options.scalars[key] = *slot;
        if (eval_cmd->parsed() || table_cmd->parsed()) {
            if (function_name == "fox_wright") {
                options.upper_weighted = parse_weighted(upper_text);
                options.lower_weighted = parse_weighted(lower_text);
            } else {
                options.upper = parse_list(upper_text);
                options.lower = parse_list(lower_text);
            }
        }
        if (eval_cmd->parsed()) return run_eval(function_name, options);
        if (table_cmd->parsed())
            return run_table(function_name, options, from, to, step);
        return run_verify(
            *suite_opt ? std::optional<std::string>(suite_path) : std::nullopt,
            *output_opt ? std::optional<std::string>(output_path)
                        : std::nullopt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pfq::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const pfq::PoleError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const pfq::NoConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return 4;
    } catch (const pfq::NonFiniteError& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
