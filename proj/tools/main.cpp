// spreadbound: command-line front end over the psb_* C API.
#include "spreadbound/spreadbound.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kCapacity = 3, kInternal = 4 };

int exit_for(psb_status status) {
    switch (status) {
    case PSB_OK: return kOk;
    case PSB_CAPACITY_EXCEEDED: return kCapacity;
    case PSB_INTERNAL_ERROR: return kInternal;
    default: return kInvalid;
    }
}

int report_error(psb_status status) {
    std::cerr << "spreadbound: " << psb_status_name(status) << ": " << psb_last_error() << "\n";
    return exit_for(status);
}

using ReportPtr = std::unique_ptr<psb_report, decltype(&psb_report_destroy)>;

std::string label(unsigned q, unsigned n, unsigned t) {
    return "A_" + std::to_string(q) + "(" + std::to_string(n) + "," + std::to_string(2 * t) + ";" +
           std::to_string(t) + ")";
}

std::string param_text(const psb_report* rep, int all, size_t row) {
    static const char* names[] = {"z", "u", "y", "x", "m"};
    std::string out;
    for (int p = PSB_PARAM_Z; p <= PSB_PARAM_M; ++p) {
        if (const char* v = psb_report_row_param(rep, all, row, static_cast<psb_param>(p))) {
            out += ' ';
            out += names[p];
            out += '=';
            out += v;
        }
    }
    return out;
}

void print_row(std::ostream& os, const psb_report* rep, int all, size_t row, const char* tag) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-6s", tag);
    os << buf << ' ' << psb_report_row_value(rep, all, row) << "  "
       << psb_method_name(psb_report_row_method(rep, all, row)) << param_text(rep, all, row) << "\n";
}

void print_text(std::ostream& os, unsigned q, unsigned n, unsigned t, const psb_report* rep, bool all_methods) {
    os << label(q, n, t) << "  k=" << psb_report_k(rep) << " r=" << psb_report_r(rep) << " l=" << psb_report_l(rep)
       << "\n";
    print_row(os, rep, 0, 0, "lower");
    print_row(os, rep, 0, 1, "upper");
    for (size_t i = 2; i < psb_report_row_count(rep, 0); ++i) print_row(os, rep, 0, i, "also");
    os << "exact  " << (psb_report_exact(rep) ? "yes" : "no") << "\n";
    if (!all_methods) return;
    os << "\nmethods:\n";
    for (size_t i = 0; i < psb_report_row_count(rep, 1); ++i) {
        print_row(os, rep, 1, i, psb_report_row_is_upper(rep, 1, i) ? "upper" : "lower");
        for (size_t j = 0; j < psb_report_row_certificate_size(rep, 1, i); ++j)
            os << "    " << psb_report_row_certificate_line(rep, 1, i, j) << "\n";
    }
}

struct Range {
    unsigned lo = 0;
    unsigned hi = 0;
};

// "a..b" or a single number.
Range parse_range(const std::string& text, const char* flag) {
    Range r;
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(text, &used));
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            r.lo = static_cast<unsigned>(std::stoul(a, &used));
            if (used != a.size()) throw std::invalid_argument(text);
            r.hi = static_cast<unsigned>(std::stoul(b, &used));
            if (used != b.size()) throw std::invalid_argument(text);
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected a..b, got '" + text + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError(flag, "empty range '" + text + "'");
    return r;
}

int cmd_bound(unsigned q, unsigned n, unsigned t, bool json, bool csv, bool all_methods) {
    psb_report* raw = nullptr;
    if (auto st = psb_report_create(q, n, t, &raw); st != PSB_OK) return report_error(st);
    ReportPtr rep(raw, psb_report_destroy);
    if (json) {
        std::cout << psb_report_json(rep.get(), all_methods) << "\n";
    } else if (csv) {
        std::cout << psb_csv_header() << "\n" << psb_report_csv(rep.get()) << "\n";
    } else {
        print_text(std::cout, q, n, t, rep.get(), all_methods);
    }
    return kOk;
}

int cmd_table(const std::vector<unsigned>& qs, Range tr, Range kr, const std::string& format) {
    std::ostringstream out;
    bool first = true;
    if (format == "csv") out << psb_csv_header() << "\n";
    if (format == "json") out << "[";
    for (unsigned q : qs) {
        for (unsigned t = tr.lo; t <= tr.hi; ++t) {
            for (unsigned k = kr.lo; k <= kr.hi; ++k) {
                for (unsigned r = 0; r < t; ++r) {
                    const unsigned n = k * t + r;
                    psb_report* raw = nullptr;
                    if (auto st = psb_report_create(q, n, t, &raw); st != PSB_OK) return report_error(st);
                    ReportPtr rep(raw, psb_report_destroy);
                    if (format == "csv") {
                        out << psb_report_csv(rep.get()) << "\n";
                    } else if (format == "json") {
                        out << (first ? "\n" : ",\n") << psb_report_json(rep.get(), 0);
                    } else {
                        if (!first) out << "\n";
                        print_text(out, q, n, t, rep.get(), false);
                    }
                    first = false;
                }
            }
        }
    }
    if (format == "json") out << "\n]\n";
    std::cout << out.str();
    return kOk;
}

int cmd_exclude(unsigned q, unsigned n, unsigned t, unsigned s, const std::string& c, bool json) {
    psb_verdict* raw = nullptr;
    if (auto st = psb_exclude_create(q, n, t, s, c.c_str(), &raw); st != PSB_OK) return report_error(st);
    std::unique_ptr<psb_verdict, decltype(&psb_verdict_destroy)> v(raw, psb_verdict_destroy);
    if (json) {
        std::cout << psb_verdict_json(v.get()) << "\n";
        return kOk;
    }
    std::cout << "hole-type (t=" << t << ", s=" << s << ", c=" << c << ") in F_" << q << "^" << n << ": "
              << (psb_verdict_excluded(v.get()) ? "excluded" : "undecided") << "\n";
    if (psb_verdict_excluded(v.get()))
        std::cout << "witness m=" << psb_verdict_witness_m(v.get()) << "  F(m)=" << psb_verdict_f_value(v.get()) << "\n";
    for (size_t i = 0; i < psb_verdict_trace_size(v.get()); ++i)
        std::cout << "  " << psb_verdict_trace_line(v.get(), i) << "\n";
    return kOk;
}

int cmd_oracle(unsigned q, unsigned n, unsigned t, const psb_budget& budget, const std::string& witness_path,
               bool json) {
    psb_oracle* raw = nullptr;
    if (auto st = psb_oracle_run(q, n, t, &budget, &raw); st != PSB_OK) return report_error(st);
    std::unique_ptr<psb_oracle, decltype(&psb_oracle_destroy)> o(raw, psb_oracle_destroy);
    if (!witness_path.empty()) {
        if (auto st = psb_oracle_write_witness(o.get(), witness_path.c_str()); st != PSB_OK) return report_error(st);
    }
    const bool passed = psb_oracle_cross_check_passed(o.get());
    if (json) {
        std::cout << psb_oracle_json(o.get()) << "\n";
    } else {
        std::cout << label(q, n, t) << " oracle\n"
                  << "size            " << psb_oracle_size(o.get()) << "\n"
                  << "proven_optimal  " << (psb_oracle_proven_optimal(o.get()) ? "yes" : "no") << "\n"
                  << "nodes           " << psb_oracle_nodes(o.get()) << "\n"
                  << "seconds         " << psb_oracle_seconds(o.get()) << "\n"
                  << "cross_check     " << (passed ? "pass" : "FAIL") << "\n";
        for (size_t i = 0; i < psb_oracle_report_size(o.get()); ++i)
            std::cout << "  " << psb_oracle_report_line(o.get(), i) << "\n";
    }
    if (!passed) {
        std::cerr << "spreadbound: oracle cross-check failed\n";
        return kInternal;
    }
    return kOk;
}

int cmd_verify(unsigned q, unsigned n, unsigned t, uint64_t count, uint64_t seed, const std::string& witness) {
    psb_check_summary sum{};
    const psb_status st = witness.empty() ? psb_check_random(q, n, t, count, seed, &sum)
                                          : psb_check_witness_file(q, n, t, witness.c_str(), &sum);
    if (st != PSB_OK) return report_error(st);
    std::cout << label(q, n, t) << " verify\n"
              << "spreads              " << sum.spreads << "\n"
              << "standard_failures    " << sum.standard_failures << "\n"
              << "congruence_failures  " << sum.congruence_failures << "\n"
              << "family_failures      " << sum.family_failures << "\n";
    const bool ok = sum.standard_failures == 0 && sum.congruence_failures == 0 && sum.family_failures == 0;
    std::cout << (ok ? "all checks passed" : "CHECK FAILURES") << "\n";
    return ok ? kOk : kInternal;
}

void instance_options(CLI::App* cmd, unsigned& q, unsigned& n, unsigned& t) {
    cmd->add_option("--q", q, "field order (2,3,4,5,7,8,9)")->required();
    cmd->add_option("--n", n, "ambient dimension")->required();
    cmd->add_option("--t", t, "subspace dimension")->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on the size of partial t-spreads in F_q^n"};
    app.set_version_flag("--version", std::string(psb_version()));
    app.require_subcommand(1);

    unsigned q = 0, n = 0, t = 0, s = 0;
    bool json = false, csv = false, all_methods = false;

    auto* bound = app.add_subcommand("bound", "best lower and upper bound for one instance");
    instance_options(bound, q, n, t);
    auto* json_flag = bound->add_flag("--json", json, "one JSON object");
    bound->add_flag("--csv", csv, "CSV header and row")->excludes(json_flag);
    bound->add_flag("--all-methods", all_methods, "list every method with parameters and certificate");

    std::vector<unsigned> q_list;
    std::string t_range, k_range, format = "text";
    auto* table = app.add_subcommand("table", "bounds over a parameter grid");
    table->add_option("--q-list", q_list, "field orders")->required()->delimiter(',');
    table->add_option("--t-range", t_range, "a..b")->required();
    table->add_option("--k-range", k_range, "a..b")->required();
    table->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

    std::string c = "0";
    auto* exclude = app.add_subcommand("exclude", "test whether a hole-type can occur");
    instance_options(exclude, q, n, t);
    exclude->add_option("--s", s, "smallest non-hole dimension")->required();
    exclude->add_option("--c", c, "number of holes")->required();
    exclude->add_flag("--json", json, "JSON verdict");

    psb_budget budget{0, 0.0, 0, 1};
    bool greedy = false;
    std::string witness_path;
    auto* oracle = app.add_subcommand("oracle", "exhaustive search for a maximum partial spread");
    instance_options(oracle, q, n, t);
    oracle->add_option("--budget-seconds", budget.max_seconds, "time limit (default 60)");
    oracle->add_option("--max-nodes", budget.max_nodes, "node limit");
    oracle->add_flag("--greedy", greedy, "single randomized greedy pass");
    oracle->add_option("--seed", budget.seed, "seed for --greedy");
    oracle->add_option("--emit-witness", witness_path, "write the witness in text form");
    oracle->add_flag("--json", json, "JSON result");

    uint64_t count = 200, seed = 1;
    std::string witness_in;
    auto* verify = app.add_subcommand("verify", "check the hyperplane counting identities on partial spreads");
    instance_options(verify, q, n, t);
    auto* random_opt = verify->add_option("--random", count, "number of random greedy partial spreads");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--witness", witness_in, "witness file instead of random spreads")->excludes(random_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bound) return cmd_bound(q, n, t, json, csv, all_methods);
        if (*table) {
            const Range tr = parse_range(t_range, "--t-range");
            const Range kr = parse_range(k_range, "--k-range");
            return cmd_table(q_list, tr, kr, format);
        }
        if (*exclude) return cmd_exclude(q, n, t, s, c, json);
        if (*oracle) {
            budget.greedy = greedy ? 1 : 0;
            return cmd_oracle(q, n, t, budget, witness_path, json);
        }
        if (*verify) return cmd_verify(q, n, t, count, seed, witness_in);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "spreadbound: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
