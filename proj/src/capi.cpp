#include "spreadbound/spreadbound.h"

#include "spreadbound/bounds.hpp"
#include "spreadbound/oracle.hpp"
#include "spreadbound/vsp.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <fstream>
#include <memory>
#include <random>
#include <optional>
#include <string>
#include <vector>

using namespace spreadbound;

namespace {

thread_local std::string g_last_error;

psb_status fail(psb_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
psb_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const CapacityError& e) {
        return fail(PSB_CAPACITY_EXCEEDED, e.what());
    } catch (const InternalError& e) {
        return fail(PSB_INTERNAL_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PSB_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(PSB_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(PSB_INTERNAL_ERROR, e.what());
    }
}

constexpr std::array<const char*, 5> kParamNames{"z", "u", "y", "x", "m"};

struct Row {
    Method method;
    Direction direction;
    std::string value;
    std::array<std::optional<std::string>, 5> params;
    std::vector<std::string> certificate;
};

Row make_row(const BoundResult& b) {
    Row row{b.method, b.direction, to_decimal(b.value), {}, b.certificate};
    const std::array<const std::optional<BigInt>*, 5> fields{&b.params.z, &b.params.u, &b.params.y, &b.params.x,
                                                             &b.params.m};
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (*fields[i]) row.params[i] = to_decimal(**fields[i]);
    return row;
}

nlohmann::ordered_json params_json(const Row& row) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kParamNames.size(); ++i)
        if (row.params[i]) p[kParamNames[i]] = *row.params[i];
    return p;
}

nlohmann::ordered_json row_json(const Row& row) {
    return {{"method", std::string(method_name(row.method))},
            {"direction", std::string(direction_name(row.direction))},
            {"value", row.value},
            {"params", params_json(row)},
            {"certificate", row.certificate}};
}

psb_method to_c(Method m) {
    return static_cast<psb_method>(static_cast<int>(m));
}

const char* cstr(const std::optional<std::string>& s) {
    return s ? s->c_str() : nullptr;
}

} // namespace

struct psb_report {
    explicit psb_report(BestBounds b) : best(std::move(b)) {}

    BestBounds best;
    std::string l;
    std::vector<Row> summary;  // lower, upper, then other attaining upper bounds
    std::vector<Row> all;
    std::string json_summary;
    std::string json_all;
    std::string csv;

    const std::vector<Row>& rows(int all_methods) const { return all_methods ? all : summary; }
    const Row* row(int all_methods, std::size_t i) const {
        const auto& r = rows(all_methods);
        return i < r.size() ? &r[i] : nullptr;
    }
};

struct psb_verdict {
    vsp::FeasibilityVerdict verdict;
    std::optional<std::string> witness_m;
    std::optional<std::string> f_value;
    std::string json;
};

struct psb_oracle {
    explicit psb_oracle(oracle::CrossCheckReport r) : report(std::move(r)) {}

    oracle::CrossCheckReport report;
    std::string witness;
    std::string json;
};

extern "C" {

const char* psb_version(void) {
    return "0.1.0";
}

const char* psb_status_name(psb_status status) {
    switch (status) {
    case PSB_OK: return "ok";
    case PSB_INVALID_ARGUMENT: return "invalid argument";
    case PSB_CAPACITY_EXCEEDED: return "capacity exceeded";
    case PSB_INTERNAL_ERROR: return "internal error";
    case PSB_IO_ERROR: return "i/o error";
    }
    return "unknown status";
}

const char* psb_method_name(psb_method method) {
    if (method < PSB_METHOD_CONSTRUCTION || method > PSB_METHOD_ORACLE) return "?";
    return method_name(static_cast<Method>(method)).data();
}

const char* psb_last_error(void) {
    return g_last_error.c_str();
}

psb_status psb_report_create(unsigned q, unsigned n, unsigned t, psb_report** out) {
    if (!out) return fail(PSB_INVALID_ARGUMENT, "psb_report_create: out is NULL");
    *out = nullptr;
    return guarded([&] {
        auto report = std::make_unique<psb_report>(best_bounds(q, n, t));
        const auto& best = report->best;
        const auto& inst = best.instance;
        report->l = to_decimal(inst.l());

        report->summary.push_back(make_row(best.lower));
        report->summary.push_back(make_row(best.upper));
        for (const auto& b : best.also_attaining) report->summary.push_back(make_row(b));
        for (const auto& b : all_bounds(inst)) report->all.push_back(make_row(b));

        nlohmann::ordered_json j = {{"q", inst.q()},
                            {"n", inst.n()},
                            {"t", inst.t()},
                            {"k", inst.k()},
                            {"r", inst.r()},
                            {"l", report->l},
                            {"lower", report->summary[0].value},
                            {"upper", report->summary[1].value},
                            {"exact", best.exact},
                            {"lower_method", std::string(method_name(best.lower.method))},
                            {"upper_method", std::string(method_name(best.upper.method))},
                            {"params", params_json(report->summary[1])}};
        nlohmann::ordered_json also = nlohmann::ordered_json::array();
        for (std::size_t i = 2; i < report->summary.size(); ++i) {
            const auto& r = report->summary[i];
            also.push_back({{"method", std::string(method_name(r.method))}, {"value", r.value}, {"params", params_json(r)}});
        }
        j["also_attaining"] = also;
        report->json_summary = j.dump();
        nlohmann::ordered_json methods = nlohmann::ordered_json::array();
        for (const auto& r : report->all) methods.push_back(row_json(r));
        j["methods"] = methods;
        report->json_all = j.dump();

        const auto& up = report->summary[1];
        const auto param = [&](psb_param p) { return up.params[p].value_or(""); };
        report->csv = std::to_string(inst.q()) + "," + std::to_string(inst.n()) + "," + std::to_string(inst.t()) + "," +
                      std::to_string(inst.k()) + "," + std::to_string(inst.r()) + "," + report->l + "," +
                      report->summary[0].value + "," + up.value + "," + (best.exact ? "true" : "false") + "," +
                      std::string(method_name(up.method)) + "," + param(PSB_PARAM_Z) + "," + param(PSB_PARAM_Y) + "," +
                      param(PSB_PARAM_X);
        *out = report.release();
        return PSB_OK;
    });
}

void psb_report_destroy(psb_report* report) {
    delete report;
}

unsigned psb_report_k(const psb_report* report) {
    return report ? report->best.instance.k() : 0;
}

unsigned psb_report_r(const psb_report* report) {
    return report ? report->best.instance.r() : 0;
}

const char* psb_report_l(const psb_report* report) {
    return report ? report->l.c_str() : nullptr;
}

const char* psb_report_lower(const psb_report* report) {
    return report ? report->summary[0].value.c_str() : nullptr;
}

const char* psb_report_upper(const psb_report* report) {
    return report ? report->summary[1].value.c_str() : nullptr;
}

int psb_report_exact(const psb_report* report) {
    return report && report->best.exact ? 1 : 0;
}

psb_method psb_report_upper_method(const psb_report* report) {
    return report ? to_c(report->best.upper.method) : PSB_METHOD_PACKING;
}

const char* psb_report_upper_param(const psb_report* report, psb_param param) {
    return psb_report_row_param(report, 0, 1, param);
}

size_t psb_report_row_count(const psb_report* report, int all_methods) {
    return report ? report->rows(all_methods).size() : 0;
}

psb_method psb_report_row_method(const psb_report* report, int all_methods, size_t row) {
    const Row* r = report ? report->row(all_methods, row) : nullptr;
    return r ? to_c(r->method) : PSB_METHOD_PACKING;
}

int psb_report_row_is_upper(const psb_report* report, int all_methods, size_t row) {
    const Row* r = report ? report->row(all_methods, row) : nullptr;
    return r && r->direction == Direction::Upper ? 1 : 0;
}

const char* psb_report_row_value(const psb_report* report, int all_methods, size_t row) {
    const Row* r = report ? report->row(all_methods, row) : nullptr;
    return r ? r->value.c_str() : nullptr;
}

const char* psb_report_row_param(const psb_report* report, int all_methods, size_t row, psb_param param) {
    const Row* r = report ? report->row(all_methods, row) : nullptr;
    if (!r || param < PSB_PARAM_Z || param > PSB_PARAM_M) return nullptr;
    return cstr(r->params[param]);
}

size_t psb_report_row_certificate_size(const psb_report* report, int all_methods, size_t row) {
    const Row* r = report ? report->row(all_methods, row) : nullptr;
    return r ? r->certificate.size() : 0;
}

const char* psb_report_row_certificate_line(const psb_report* report, int all_methods, size_t row, size_t line) {
    const Row* r = report ? report->row(all_methods, row) : nullptr;
    return r && line < r->certificate.size() ? r->certificate[line].c_str() : nullptr;
}

const char* psb_report_json(const psb_report* report, int all_methods) {
    if (!report) return nullptr;
    return all_methods ? report->json_all.c_str() : report->json_summary.c_str();
}

const char* psb_report_csv(const psb_report* report) {
    return report ? report->csv.c_str() : nullptr;
}

const char* psb_csv_header(void) {
    return "q,n,t,k,r,l,lower,upper,exact,upper_method,z,y,x";
}

psb_status psb_exclude_create(unsigned q, unsigned n, unsigned t, unsigned s, const char* c, psb_verdict** out) {
    if (!out) return fail(PSB_INVALID_ARGUMENT, "psb_exclude_create: out is NULL");
    *out = nullptr;
    if (!c) return fail(PSB_INVALID_ARGUMENT, "psb_exclude_create: c is NULL");
    return guarded([&] {
        if (!is_supported_field_order(q)) {
            throw std::invalid_argument("unsupported field order q=" + std::to_string(q));
        }
        const vsp::HoleType type(t, s, parse_decimal(c));
        auto v = std::make_unique<psb_verdict>();
        v->verdict = vsp::exclude_hole_type(q, n, type);
        if (v->verdict.witness_m) v->witness_m = to_decimal(*v->verdict.witness_m);
        if (v->verdict.f_value) v->f_value = to_decimal(*v->verdict.f_value);
        nlohmann::ordered_json j = {{"q", q},
                            {"n", n},
                            {"t", t},
                            {"s", s},
                            {"c", to_decimal(type.c)},
                            {"status", v->verdict.excluded() ? "excluded" : "undecided"},
                            {"trace", v->verdict.trace}};
        j["witness_m"] = v->witness_m ? nlohmann::ordered_json(*v->witness_m) : nlohmann::ordered_json(nullptr);
        j["f_value"] = v->f_value ? nlohmann::ordered_json(*v->f_value) : nlohmann::ordered_json(nullptr);
        v->json = j.dump();
        *out = v.release();
        return PSB_OK;
    });
}

void psb_verdict_destroy(psb_verdict* verdict) {
    delete verdict;
}

int psb_verdict_excluded(const psb_verdict* verdict) {
    return verdict && verdict->verdict.excluded() ? 1 : 0;
}

const char* psb_verdict_witness_m(const psb_verdict* verdict) {
    return verdict ? cstr(verdict->witness_m) : nullptr;
}

const char* psb_verdict_f_value(const psb_verdict* verdict) {
    return verdict ? cstr(verdict->f_value) : nullptr;
}

size_t psb_verdict_trace_size(const psb_verdict* verdict) {
    return verdict ? verdict->verdict.trace.size() : 0;
}

const char* psb_verdict_trace_line(const psb_verdict* verdict, size_t line) {
    if (!verdict || line >= verdict->verdict.trace.size()) return nullptr;
    return verdict->verdict.trace[line].c_str();
}

const char* psb_verdict_json(const psb_verdict* verdict) {
    return verdict ? verdict->json.c_str() : nullptr;
}

psb_status psb_oracle_run(unsigned q, unsigned n, unsigned t, const psb_budget* budget, psb_oracle** out) {
    if (!out) return fail(PSB_INVALID_ARGUMENT, "psb_oracle_run: out is NULL");
    *out = nullptr;
    return guarded([&] {
        oracle::SearchBudget b;
        if (budget) {
            if (budget->max_nodes > 0) b.max_nodes = budget->max_nodes;
            if (budget->max_seconds > 0) b.max_seconds = std::chrono::duration<double>(budget->max_seconds);
            b.mode = budget->greedy ? oracle::SearchMode::Greedy : oracle::SearchMode::Exact;
            b.seed = budget->seed;
        }
        auto o = std::make_unique<psb_oracle>(oracle::cross_check(q, n, t, b));
        const auto& rep = o->report;
        o->witness = oracle::format_witness(rep.search.witness);
        nlohmann::ordered_json j = {{"q", q},
                            {"n", n},
                            {"t", t},
                            {"size", std::to_string(rep.search.size)},
                            {"proven_optimal", rep.search.proven_optimal},
                            {"nodes", rep.search.nodes},
                            {"seconds", rep.search.seconds},
                            {"holes", std::to_string(rep.search.witness.hole_count())},
                            {"lower", to_decimal(rep.bounds.lower.value)},
                            {"upper", to_decimal(rep.bounds.upper.value)},
                            {"upper_method", std::string(method_name(rep.bounds.upper.method))},
                            {"witness_id", rep.oracle_bound.params.witness_id.value_or("")},
                            {"cross_check", rep.passed ? "pass" : "fail"},
                            {"report", rep.lines}};
        o->json = j.dump();
        *out = o.release();
        return PSB_OK;
    });
}

void psb_oracle_destroy(psb_oracle* oracle) {
    delete oracle;
}

uint64_t psb_oracle_size(const psb_oracle* oracle) {
    return oracle ? oracle->report.search.size : 0;
}

int psb_oracle_proven_optimal(const psb_oracle* oracle) {
    return oracle && oracle->report.search.proven_optimal ? 1 : 0;
}

uint64_t psb_oracle_nodes(const psb_oracle* oracle) {
    return oracle ? oracle->report.search.nodes : 0;
}

double psb_oracle_seconds(const psb_oracle* oracle) {
    return oracle ? oracle->report.search.seconds : 0.0;
}

int psb_oracle_cross_check_passed(const psb_oracle* oracle) {
    return oracle && oracle->report.passed ? 1 : 0;
}

size_t psb_oracle_report_size(const psb_oracle* oracle) {
    return oracle ? oracle->report.lines.size() : 0;
}

const char* psb_oracle_report_line(const psb_oracle* oracle, size_t line) {
    if (!oracle || line >= oracle->report.lines.size()) return nullptr;
    return oracle->report.lines[line].c_str();
}

const char* psb_oracle_witness_text(const psb_oracle* oracle) {
    return oracle ? oracle->witness.c_str() : nullptr;
}

psb_status psb_oracle_write_witness(const psb_oracle* oracle, const char* path) {
    if (!oracle || !path) return fail(PSB_INVALID_ARGUMENT, "psb_oracle_write_witness: NULL argument");
    std::ofstream file(path);
    if (!file) return fail(PSB_IO_ERROR, std::string("cannot open ") + path + " for writing");
    file << oracle->witness;
    if (!file) return fail(PSB_IO_ERROR, std::string("failed writing ") + path);
    return PSB_OK;
}

const char* psb_oracle_json(const psb_oracle* oracle) {
    return oracle ? oracle->json.c_str() : nullptr;
}

} // extern "C"

namespace {

void check_one(const oracle::PartialSpread& spread, psb_check_summary& summary) {
    const auto& inst = spread.instance;
    ++summary.spreads;
    if (inst.n() >= 2) {
        if (!oracle::verify_standard_equations(oracle::hole_distribution(spread)).ok) ++summary.standard_failures;
        if (!oracle::verify_hyperplane_congruences(spread).ok) ++summary.congruence_failures;
    }
    if (inst.t() >= 2 && inst.n() > inst.t() && !spread.members.empty()) {
        const BigInt c = spread.hole_count();
        for (const auto& [i, excluded] : vsp::excluded_hole_family(inst.q(), inst.t(), inst.t())) {
            if (excluded == c) {
                ++summary.family_failures;
                break;
            }
        }
    }
}

} // namespace

extern "C" {

psb_status psb_check_random(unsigned q, unsigned n, unsigned t, uint64_t count, uint64_t seed,
                            psb_check_summary* out) {
    if (!out) return fail(PSB_INVALID_ARGUMENT, "psb_check_random: out is NULL");
    *out = psb_check_summary{};
    return guarded([&] {
        std::mt19937_64 rng(seed);
        for (uint64_t i = 0; i < count; ++i) check_one(oracle::random_greedy_partial_spread(q, n, t, rng), *out);
        return PSB_OK;
    });
}

psb_status psb_check_witness_file(unsigned q, unsigned n, unsigned t, const char* path, psb_check_summary* out) {
    if (!out || !path) return fail(PSB_INVALID_ARGUMENT, "psb_check_witness_file: NULL argument");
    *out = psb_check_summary{};
    std::ifstream file(path);
    if (!file) return fail(PSB_IO_ERROR, std::string("cannot open ") + path);
    return guarded([&] {
        check_one(oracle::parse_witness(file, q, n, t), *out);
        return PSB_OK;
    });
}

} // extern "C"
