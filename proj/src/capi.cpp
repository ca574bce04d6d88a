#include "twistknot.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "twistknot/report_json.hpp"
#include "twistknot/verify.hpp"

struct tk_report {
    twistknot::ConjectureReport report;
};

namespace {

tk_status translate_current_exception() {
    try {
        throw;
    } catch (const twistknot::InvalidQ&) {
        return TK_ERR_INVALID_Q;
    } catch (const twistknot::NoConvergence&) {
        return TK_ERR_NO_CONVERGENCE;
    } catch (const twistknot::ParseError&) {
        return TK_ERR_PARSE;
    } catch (const twistknot::Error&) {
        return TK_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        return TK_ERR_INTERNAL;
    } catch (...) {
        return TK_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* tk_version(void) { return "1.0.0"; }

const char* tk_status_message(tk_status status) {
    switch (status) {
        case TK_OK:
            return "ok";
        case TK_ERR_ARG:
            return "null pointer or malformed argument";
        case TK_ERR_INVALID_Q:
            return "q must be a nonzero integer";
        case TK_ERR_DOMAIN:
            return "exact-arithmetic precondition violated";
        case TK_ERR_NO_CONVERGENCE:
            return "numeric root finder did not converge";
        case TK_ERR_PARSE:
            return "malformed report JSON";
        case TK_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void tk_options_init(tk_options* options) {
    if (!options) return;
    options->run_fox = 0;
    options->run_numeric = 1;
    options->tol = 1e-12;
}

tk_status tk_certify(int32_t q, const tk_options* options, tk_report** out) {
    if (!out) return TK_ERR_ARG;
    *out = nullptr;
    twistknot::CertifyOptions opts;
    if (options) {
        opts.run_fox = options->run_fox != 0;
        opts.run_numeric = options->run_numeric != 0;
        opts.tol = options->tol > 0.0 ? options->tol : 1e-12;
    }
    try {
        auto* handle = new tk_report{twistknot::certify(q, opts)};
        *out = handle;
        return TK_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

tk_status tk_report_from_json(const char* json, tk_report** out) {
    if (!json || !out) return TK_ERR_ARG;
    *out = nullptr;
    try {
        auto* handle = new tk_report{twistknot::parse_report_json(json)};
        *out = handle;
        return TK_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void tk_report_free(tk_report* report) { delete report; }

tk_status tk_report_to_json(const tk_report* report, char** out) {
    if (!report || !out) return TK_ERR_ARG;
    *out = nullptr;
    try {
        const std::string text = twistknot::render_report_json(report->report);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) return TK_ERR_INTERNAL;
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
        return TK_OK;
    } catch (...) {
        return translate_current_exception();
    }
}

void tk_string_free(char* s) { std::free(s); }

int32_t tk_report_q(const tk_report* report) { return report ? report->report.q : 0; }

int tk_report_consistent(const tk_report* report) {
    return report && report->report.verdict_consistent ? 1 : 0;
}

int tk_report_genus_detected(const tk_report* report) {
    return report && report->report.genus_detected ? 1 : 0;
}

int tk_report_monic_at_some_rep(const tk_report* report) {
    return report && report->report.monic_at_some_rep ? 1 : 0;
}

int tk_report_fibered_expected(const tk_report* report) {
    return report && report->report.fibered_expected ? 1 : 0;
}

int tk_report_fox_agrees(const tk_report* report) {
    if (!report || !report->report.fox_oracle_agrees) return -1;
    return *report->report.fox_oracle_agrees ? 1 : 0;
}

int tk_report_numeric_ok(const tk_report* report) {
    if (!report || !report->report.numeric) return -1;
    return report->report.numeric->ok ? 1 : 0;
}

}  // extern "C"
