#include "colbn/colbn.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "core/asymptotics.hpp"
#include "core/count_table.hpp"
#include "core/oracles.hpp"
#include "core/partition.hpp"
#include "core/polynomials.hpp"
#include "core/sampler.hpp"
#include "core/statistics.hpp"

struct colbn_table {
    colbn::CountTable impl;
};

struct colbn_sampler {
    std::unique_ptr<colbn::CountTable> table;
    std::unique_ptr<colbn::UniformSampler> stream;  // references *table
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating C++ failures into status codes.
template <typename Fn>
int guarded(Fn&& body) {
    try {
        g_last_error.clear();
        body();
        return COLBN_OK;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return COLBN_ERANGE;
    } catch (const colbn::ConvergenceError& e) {
        g_last_error = e.what();
        return COLBN_ENOCONV;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return COLBN_EINVAL;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return COLBN_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return COLBN_EINTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return COLBN_EINTERNAL;
    }
}

int require(bool ok, const char* message) {
    if (ok) return COLBN_OK;
    g_last_error = message;
    return COLBN_EINVAL;
}

std::string rational_str(const colbn::Rat& q) { return q.get_str(); }

colbn::Int parse_decimal(const char* s) {
    if (!s) throw std::invalid_argument("decimal string is NULL");
    colbn::Int v;
    if (mpz_set_str(v.get_mpz_t(), s, 10) != 0)
        throw std::invalid_argument(std::string("not a decimal integer: ") + s);
    return v;
}

}  // namespace

extern "C" {

const char* colbn_errstr(int status) {
    switch (status) {
        case COLBN_OK: return "COLBN_OK";
        case COLBN_EINVAL: return "COLBN_EINVAL";
        case COLBN_ERANGE: return "COLBN_ERANGE";
        case COLBN_ENOCONV: return "COLBN_ENOCONV";
        case COLBN_EINTERNAL: return "COLBN_EINTERNAL";
        default: return "COLBN_UNKNOWN";
    }
}

const char* colbn_last_error(void) { return g_last_error.c_str(); }

void colbn_free(char* p) { std::free(p); }

void colbn_free_strings(char** strings, size_t n) {
    if (!strings) return;
    for (size_t i = 0; i < n; ++i) std::free(strings[i]);
    std::free(strings);
}

int colbn_table_create(unsigned c, unsigned m, unsigned n_max, colbn_table** out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    *out = nullptr;
    return guarded([&] {
        *out = new colbn_table{colbn::CountTable(colbn::ColorParams(c, m), n_max)};
    });
}

void colbn_table_destroy(colbn_table* table) { delete table; }

unsigned colbn_table_n_max(const colbn_table* table) {
    return table ? table->impl.n_max() : 0;
}

int colbn_table_entry(const colbn_table* table, unsigned n, unsigned k, char** out) {
    if (int rc = require(table && out, "table/out pointer is NULL")) return rc;
    return guarded([&] { *out = dup_string(table->impl.at(n, k).get_str()); });
}

int colbn_table_total(const colbn_table* table, unsigned n, char** out) {
    if (int rc = require(table && out, "table/out pointer is NULL")) return rc;
    return guarded([&] { *out = dup_string(table->impl.total(n).get_str()); });
}

int colbn_table_log_total(const colbn_table* table, unsigned n, double* out) {
    if (int rc = require(table && out, "table/out pointer is NULL")) return rc;
    return guarded([&] { *out = colbn::log_exact(table->impl.total(n)); });
}

int colbn_total(unsigned c, unsigned m, unsigned n, char** out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        *out = dup_string(colbn::total(colbn::ColorParams(c, m), n).get_str());
    });
}

int colbn_closed_form_total(unsigned c, unsigned m, unsigned n, char** out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        *out = dup_string(colbn::closed_form_total(colbn::ColorParams(c, m), n).get_str());
    });
}

int colbn_brute_force_total(unsigned c, unsigned m, unsigned n, char** out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        *out = dup_string(colbn::brute_force_total(colbn::ColorParams(c, m), n).get_str());
    });
}

int colbn_egf_series_totals(unsigned c, unsigned m, unsigned n_max,
                            char*** out, size_t* out_len) {
    if (int rc = require(out && out_len, "out pointer is NULL")) return rc;
    *out = nullptr;
    *out_len = 0;
    return guarded([&] {
        auto values = colbn::egf_series_totals(colbn::ColorParams(c, m), n_max);
        char** arr = static_cast<char**>(std::calloc(values.size(), sizeof(char*)));
        if (!arr) throw std::bad_alloc();
        for (size_t i = 0; i < values.size(); ++i) {
            try {
                arr[i] = dup_string(values[i].get_str());
            } catch (...) {
                colbn_free_strings(arr, i);
                throw;
            }
        }
        *out = arr;
        *out_len = values.size();
    });
}

int colbn_stirling2(unsigned n, unsigned k, char** out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] { *out = dup_string(colbn::stirling2(n, k).get_str()); });
}

int colbn_poly_recurrence_ok(const colbn_table* table, unsigned n, int* ok) {
    if (int rc = require(table && ok, "table/out pointer is NULL")) return rc;
    return guarded([&] { *ok = colbn::verify_poly_recurrence(table->impl, n) ? 1 : 0; });
}

int colbn_poly_negative_roots(const colbn_table* table, unsigned n,
                              unsigned* distinct_negative, unsigned* gcd_degree) {
    if (int rc = require(table && distinct_negative, "table/out pointer is NULL")) return rc;
    return guarded([&] {
        auto rc_ = colbn::count_distinct_negative_roots(
            colbn::block_polynomial(table->impl, n));
        *distinct_negative = rc_.distinct_negative_roots;
        if (gcd_degree) *gcd_degree = rc_.gcd_degree;
    });
}

int colbn_poly_newton_ok(const colbn_table* table, unsigned n, int* ok) {
    if (int rc = require(table && ok, "table/out pointer is NULL")) return rc;
    return guarded([&] {
        *ok = colbn::newton_inequalities(colbn::block_polynomial(table->impl, n)) ? 1 : 0;
    });
}

void colbn_moments_clear(colbn_moments* moments) {
    if (!moments) return;
    std::free(moments->e_rational);
    std::free(moments->v_rational);
    moments->e_rational = nullptr;
    moments->v_rational = nullptr;
}

namespace {

void fill_moments(const colbn::MomentPair& mp, colbn_moments* out) {
    out->e = mp.e_float;
    out->v = mp.v_float;
    out->e_rational = dup_string(rational_str(mp.e));
    try {
        out->v_rational = dup_string(rational_str(mp.v));
    } catch (...) {
        std::free(out->e_rational);
        out->e_rational = nullptr;
        throw;
    }
}

}  // namespace

int colbn_moments_direct(const colbn_table* table, unsigned n, colbn_moments* out) {
    if (int rc = require(table && out, "table/out pointer is NULL")) return rc;
    return guarded([&] { fill_moments(colbn::moments_direct(table->impl, n), out); });
}

int colbn_moments_ratio(const colbn_table* table, unsigned n, colbn_moments* out) {
    if (int rc = require(table && out, "table/out pointer is NULL")) return rc;
    return guarded([&] { fill_moments(colbn::moments_ratio(table->impl, n), out); });
}

int colbn_ks_to_normal(const colbn_table* table, unsigned n, double* out) {
    if (int rc = require(table && out, "table/out pointer is NULL")) return rc;
    return guarded([&] { *out = colbn::ks_to_normal(table->impl, n); });
}

int colbn_solve_saddle(unsigned c, unsigned m, double x, double* r, double* residual) {
    if (int rc = require(r != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        auto sp = colbn::solve_saddle(colbn::SaddleParams(c, m), x);
        *r = sp.r;
        if (residual) *residual = sp.residual;
    });
}

int colbn_log_total_asymptotic(unsigned c, unsigned m, unsigned n,
                               colbn_log_estimate* out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        auto est = colbn::log_total_asymptotic(colbn::SaddleParams(c, m), n);
        out->r = est.r;
        out->log_value = est.log_value;
        for (int i = 0; i < 6; ++i) out->terms[i] = est.terms[i];
    });
}

int colbn_log_total_exact(unsigned c, unsigned m, unsigned n, double* out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        *out = colbn::log_total_exact(colbn::ColorParams(c, m), n);
    });
}

int colbn_lemma_residuals_eval(unsigned c, unsigned m, unsigned n,
                               colbn_lemma_residuals* out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        auto lr = colbn::lemma_residuals(colbn::SaddleParams(c, m), n);
        out->t0 = lr.t0;
        out->t1 = lr.t1;
        out->t2 = lr.t2;
        out->res61 = lr.res61;
        out->res62 = lr.res62;
        out->res63 = lr.res63;
        out->res64 = lr.res64;
    });
}

int colbn_saddle_growth_check(unsigned c, unsigned m, unsigned n,
                              colbn_growth_diag* out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    return guarded([&] {
        auto gd = colbn::saddle_growth_check(colbn::SaddleParams(c, m), n);
        out->r = gd.r;
        out->d1 = gd.d1;
        out->d2 = gd.d2;
    });
}

int colbn_second_divided_difference(double (*h)(double x, void* ctx), void* ctx,
                                    double a, double b, double c, double* out) {
    if (int rc = require(h && out, "h/out pointer is NULL")) return rc;
    return guarded([&] {
        *out = colbn::second_divided_difference(
            [h, ctx](double x) { return h(x, ctx); }, a, b, c);
    });
}

int colbn_unrank(const colbn_table* table, unsigned n, const char* rank_decimal,
                 char** out_text) {
    if (int rc = require(table && out_text, "table/out pointer is NULL")) return rc;
    return guarded([&] {
        colbn::Int r = parse_decimal(rank_decimal);
        *out_text = dup_string(colbn::to_text(colbn::unrank(table->impl, n, r)));
    });
}

int colbn_rank(const colbn_table* table, const char* partition_text,
               char** out_rank_decimal) {
    if (int rc = require(table && partition_text && out_rank_decimal,
                         "table/text/out pointer is NULL"))
        return rc;
    return guarded([&] {
        auto p = colbn::parse_text(partition_text);
        *out_rank_decimal = dup_string(colbn::rank(table->impl, p).get_str());
    });
}

int colbn_validate(unsigned c, unsigned m, unsigned n, const char* partition_text,
                   int* ok) {
    if (int rc = require(partition_text && ok, "text/out pointer is NULL")) return rc;
    return guarded([&] {
        colbn::ColoredPartition p = colbn::parse_text(partition_text);
        *ok = (p.n == n && colbn::validate(colbn::ColorParams(c, m), p)) ? 1 : 0;
    });
}

int colbn_enumerate(unsigned c, unsigned m, unsigned n, char*** out, size_t* out_len) {
    if (int rc = require(out && out_len, "out pointer is NULL")) return rc;
    *out = nullptr;
    *out_len = 0;
    return guarded([&] {
        auto all = colbn::brute_force_enumerate(colbn::ColorParams(c, m), n);
        char** arr = static_cast<char**>(std::calloc(all.size(), sizeof(char*)));
        if (!arr) throw std::bad_alloc();
        for (size_t i = 0; i < all.size(); ++i) {
            try {
                arr[i] = dup_string(colbn::to_text(all[i]));
            } catch (...) {
                colbn_free_strings(arr, i);
                throw;
            }
        }
        *out = arr;
        *out_len = all.size();
    });
}

int colbn_sampler_create(unsigned c, unsigned m, unsigned n, uint64_t seed,
                         colbn_sampler** out) {
    if (int rc = require(out != nullptr, "out pointer is NULL")) return rc;
    *out = nullptr;
    return guarded([&] {
        auto s = std::make_unique<colbn_sampler>();
        s->table = std::make_unique<colbn::CountTable>(colbn::ColorParams(c, m), n);
        s->stream = std::make_unique<colbn::UniformSampler>(*s->table, n, seed);
        *out = s.release();
    });
}

void colbn_sampler_destroy(colbn_sampler* sampler) { delete sampler; }

int colbn_sampler_next(colbn_sampler* sampler, char** out_text,
                       char** out_rank_decimal, unsigned* out_k) {
    if (int rc = require(sampler != nullptr, "sampler is NULL")) return rc;
    return guarded([&] {
        auto [p, r] = sampler->stream->next();
        if (out_k) *out_k = static_cast<unsigned>(p.blocks.size());
        char* text = out_text ? dup_string(colbn::to_text(p)) : nullptr;
        if (out_rank_decimal) {
            try {
                *out_rank_decimal = dup_string(r.get_str());
            } catch (...) {
                std::free(text);
                throw;
            }
        }
        if (out_text) *out_text = text;
    });
}

}  // extern "C"
