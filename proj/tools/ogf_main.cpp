// Command-line front end for the generating-function family library:
// expansion of family specification documents, exact closed-form values,
// identity verification suites, the named-family catalog, and sequence /
// numeric transforms.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ogf/binet.hpp"
#include "ogf/catalog.hpp"
#include "ogf/errors.hpp"
#include "ogf/parser.hpp"
#include "ogf/series.hpp"
#include "ogf/spec_doc.hpp"
#include "ogf/transforms.hpp"
#include "ogf/verify.hpp"

namespace {

using namespace ogf;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail(errc::io_error, "failed while reading '" + path + "'");
    return buffer.str();
}

std::vector<Polynomial> apply_eval(std::vector<Polynomial> values,
                                   const std::map<unsigned, Rational>& point) {
    if (!point.empty())
        for (Polynomial& v : values) v = v.eval_partial(point);
    return values;
}

void print_values(const std::vector<Polynomial>& values, unsigned lo, bool as_json, bool as_csv) {
    if (as_json) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            nlohmann::ordered_json row;
            row["n"] = lo + i;
            row["value"] = values[i].to_string();
            rows.push_back(row);
        }
        std::cout << rows.dump(2) << "\n";
        return;
    }
    if (as_csv) std::cout << "n,value\n";
    const char sep = as_csv ? ',' : '\t';
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << lo + i << sep << values[i].to_string() << "\n";
}

/// "A..B" -> [A, B] with A <= B (parse_error otherwise).
std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        fail(errc::parse_error, "range '" + text + "' is not of the form A..B");
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    auto parse_bound = [&](const std::string& part) -> unsigned {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            fail(errc::parse_error, "range bound '" + part + "' is not a nonnegative integer");
        return static_cast<unsigned>(std::stoul(part));
    };
    unsigned lo = parse_bound(a), hi = parse_bound(b);
    if (lo > hi) fail(errc::parse_error, "empty range " + text);
    return {lo, hi};
}

ParamMap parse_params(const std::vector<std::string>& pairs) {
    ParamMap params;
    for (const std::string& pair : pairs) {
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(errc::parse_error, "parameter '" + pair + "' is not of the form name=value");
        params[pair.substr(0, eq)] = Rational::from_string(pair.substr(eq + 1));
    }
    return params;
}

int cmd_expand(const std::string& spec_path, bool as_json, bool as_csv) {
    SpecDocument doc = parse_spec_document(read_file(spec_path));
    std::vector<Polynomial> values =
        apply_eval(expand_S_higher(doc.spec).coefficients(), doc.eval);
    print_values(values, 0, as_json, as_csv);
    return 0;
}

int cmd_binet(const std::string& p1_text, const std::string& p2_text, const std::string& q0_text,
              const std::string& q1_text, unsigned n) {
    Rational p1 = Rational::from_string(p1_text);
    Rational p2 = Rational::from_string(p2_text);
    QuadraticRootData roots = quadratic_roots(p1, p2);
    std::cout << "denominator: 1 + (" << p1.to_string() << ")*w + (" << p2.to_string()
              << ")*w^2\n";
    std::cout << "discriminant: " << roots.discriminant.to_string() << "\n";
    std::cout << "sqrt(disc): " << roots.sqrt_disc.to_string() << "\n";
    std::cout << "root a1: " << roots.a1.to_string() << "\n";
    std::cout << "root a2: " << roots.a2.to_string() << "\n";
    const bool has_numerator = !q0_text.empty() || !q1_text.empty();
    SurdElement value;
    if (has_numerator) {
        Rational q0 = q0_text.empty() ? Rational(0) : Rational::from_string(q0_text);
        Rational q1 = q1_text.empty() ? Rational(0) : Rational::from_string(q1_text);
        std::cout << "numerator: (" << q0.to_string() << ") + (" << q1.to_string() << ")*w\n";
        value = binet_S2(p1, p2, q0, q1, n);
        std::cout << "s_" << n;
    } else {
        value = binet_Y2(p1, p2, n);
        std::cout << "y_" << n;
    }
    std::cout << " = " << value.to_string() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int n_max) {
    std::vector<VerifyResult> results = run_verify_suite(suite, n_max);
    unsigned passed = 0, flagged = 0, failed = 0;
    for (const VerifyResult& r : results) {
        switch (r.status) {
        case VerifyStatus::pass: ++passed; break;
        case VerifyStatus::flagged: ++flagged; break;
        case VerifyStatus::fail: ++failed; break;
        }
        std::printf("%-7s %s: %s\n", to_string(r.status), r.id.c_str(), r.detail.c_str());
    }
    std::printf("%zu checks: %u passed, %u flagged, %u failed\n", results.size(), passed, flagged,
                failed);
    return failed == 0 ? 0 : 1;
}

int cmd_catalog_list() {
    for (const CatalogEntry& entry : catalog_entries()) {
        std::cout << entry.name << "  ["
                  << (entry.kind == EntryKind::numbers ? "numbers" : "polynomials") << "]\n";
        std::cout << "    " << entry.summary << "\n";
        if (entry.params.empty()) {
            std::cout << "    params: (none)\n";
        } else {
            for (const ParamSpec& p : entry.params) {
                std::cout << "    param " << p.name << ": " << p.doc << " ("
                          << (p.integral ? "integer" : "rational");
                if (p.has_min) std::cout << " >= " << p.min_value.to_string();
                if (p.has_default)
                    std::cout << ", default " << p.default_value.to_string();
                else
                    std::cout << ", required";
                std::cout << ")\n";
            }
        }
        if (!entry.cross_check_doc.empty())
            std::cout << "    reference: " << entry.cross_check_doc << "\n";
        std::cout << "    source: " << entry.provenance << "\n";
    }
    return 0;
}

int cmd_catalog_eval(const std::string& name, const std::vector<std::string>& param_pairs,
                     const std::string& range_text, bool as_json, bool as_csv) {
    auto [lo, hi] = parse_range(range_text);
    std::vector<Polynomial> values = catalog_eval(name, parse_params(param_pairs), lo, hi);
    print_values(values, lo, as_json, as_csv);
    return 0;
}

int cmd_transform_euler(const std::string& spec_path, const std::string& theta_text,
                        bool inverse) {
    SpecDocument doc = parse_spec_document(read_file(spec_path));
    Polynomial theta = parse_polynomial(theta_text);
    std::vector<Polynomial> u = expand_S_higher(doc.spec).coefficients();
    std::vector<Polynomial> v = inverse ? euler_inverse(u, theta) : euler_transform(u, theta);
    print_values(apply_eval(std::move(v), doc.eval), 0, false, false);
    return 0;
}

int cmd_transform_lambert(double x, double tol) {
    NumericSum sum = lambert_partial(x, tol);
    std::printf("value: %.15g\n", sum.value);
    std::printf("terms: %u\n", sum.terms_used);
    std::printf("last_term: %.15g\n", sum.last_term);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact expansion and verification of rational generating-function families"};
    app.require_subcommand(1);
    std::function<int()> action;

    // expand
    {
        auto* cmd = app.add_subcommand("expand", "Expand a family specification document");
        auto spec_path = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        auto as_csv = std::make_shared<bool>(false);
        cmd->add_option("--spec", *spec_path, "specification document (JSON)")->required();
        auto* jf = cmd->add_flag("--json", *as_json, "emit a JSON array of {n, value}");
        auto* cf = cmd->add_flag("--csv", *as_csv, "emit CSV with header n,value");
        jf->excludes(cf);
        cmd->callback([&action, spec_path, as_json, as_csv] {
            action = [=] { return cmd_expand(*spec_path, *as_json, *as_csv); };
        });
    }

    // binet
    {
        auto* cmd = app.add_subcommand(
            "binet", "Exact two-term closed-form value with the surd decomposition shown");
        auto p1 = std::make_shared<std::string>();
        auto p2 = std::make_shared<std::string>();
        auto q0 = std::make_shared<std::string>();
        auto q1 = std::make_shared<std::string>();
        auto n = std::make_shared<unsigned>(0);
        cmd->add_option("--p1", *p1, "denominator coefficient p1 (rational)")->required();
        cmd->add_option("--p2", *p2, "denominator coefficient p2 (rational)")->required();
        auto* q0_opt = cmd->add_option("--q0", *q0, "numerator constant term (rational)");
        auto* q1_opt = cmd->add_option("--q1", *q1, "numerator linear term (rational)");
        q0_opt->needs(q1_opt);
        q1_opt->needs(q0_opt);
        cmd->add_option("--n", *n, "sequence index")->required();
        cmd->callback([&action, p1, p2, q0, q1, n] {
            action = [=] { return cmd_binet(*p1, *p2, *q0, *q1, *n); };
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand("verify", "Run identity cross-check suites");
        auto suite = std::make_shared<std::string>("all");
        auto n_max = std::make_shared<int>(10);
        cmd->add_option("--suite", *suite,
                        "suite name: explicit, recurrence, binet, euler, lambert, catalog, all");
        cmd->add_option("--n-max", *n_max, "expansion depth bound (clamped to [4, 64])");
        cmd->callback([&action, suite, n_max] {
            action = [=] { return cmd_verify(*suite, *n_max); };
        });
    }

    // catalog
    {
        auto* cmd = app.add_subcommand("catalog", "Named-family registry");
        cmd->require_subcommand(1);
        auto* list = cmd->add_subcommand("list", "List every registered family");
        list->callback([&action] { action = [] { return cmd_catalog_list(); }; });

        auto* eval = cmd->add_subcommand("eval", "Expand one registered family");
        auto name = std::make_shared<std::string>();
        auto params = std::make_shared<std::vector<std::string>>();
        auto range = std::make_shared<std::string>("0..10");
        auto as_json = std::make_shared<bool>(false);
        auto as_csv = std::make_shared<bool>(false);
        eval->add_option("--name", *name, "entry name (see catalog list)")->required();
        eval->add_option("--params", *params, "entry parameters as name=value pairs");
        eval->add_option("--n-range", *range, "index range A..B (default 0..10)");
        auto* jf = eval->add_flag("--json", *as_json, "emit a JSON array of {n, value}");
        auto* cf = eval->add_flag("--csv", *as_csv, "emit CSV with header n,value");
        jf->excludes(cf);
        eval->callback([&action, name, params, range, as_json, as_csv] {
            action = [=] { return cmd_catalog_eval(*name, *params, *range, *as_json, *as_csv); };
        });
    }

    // transform
    {
        auto* cmd = app.add_subcommand("transform", "Sequence and numeric transforms");
        cmd->require_subcommand(1);

        auto* euler = cmd->add_subcommand(
            "euler", "Binomial (Euler-type) transform of an expanded specification");
        auto spec_path = std::make_shared<std::string>();
        auto theta = std::make_shared<std::string>();
        auto inverse = std::make_shared<bool>(false);
        euler->add_option("--spec", *spec_path, "specification document (JSON)")->required();
        euler->add_option("--theta", *theta, "transform parameter (polynomial expression)")
            ->required();
        euler->add_flag("--inverse", *inverse, "apply the inverse transform");
        euler->callback([&action, spec_path, theta, inverse] {
            action = [=] { return cmd_transform_euler(*spec_path, *theta, *inverse); };
        });

        auto* lambert = cmd->add_subcommand("lambert", "Partial Lambert-series sum");
        auto x = std::make_shared<double>(0.0);
        auto tol = std::make_shared<double>(1e-12);
        lambert->add_option("--x", *x, "evaluation point, |x| < 1")->required();
        lambert->add_option("--tol", *tol, "tail tolerance (default 1e-12)");
        lambert->callback([&action, x, tol] {
            action = [=] { return cmd_transform_lambert(*x, *tol); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const ogf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_usage_error() ? 2 : 1;
    }
}
