#include "delmorse.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "delmorse/collapse.hpp"
#include "delmorse/complex.hpp"
#include "delmorse/io.hpp"
#include "delmorse/morse.hpp"
#include "delmorse/persistence.hpp"
#include "delmorse/wrap.hpp"

using namespace delmorse;

struct dm_points_s {
    WeightedPointSet data;
};
struct dm_complex_s {
    FilteredComplex data;
};
struct dm_gradient_s {
    FilteredComplex complex;  // owns the complex the field points into
    GeneralizedVectorField field;
    Simplex selective;
};
struct dm_collapse_s {
    CollapseSequence seq;
    bool verified = false;
    std::string failure;
};
struct dm_barcode_s {
    Barcode data;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

template <typename Fn>
dm_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(e.what());
        return DM_ERR_PARSE;
    } catch (const DegenerateInput& e) {
        set_error(e.what());
        return DM_ERR_DEGENERATE;
    } catch (const PreconditionViolated& e) {
        set_error(e.what());
        return DM_ERR_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return DM_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

BuildOptions to_build_options(const dm_options* opt) {
    BuildOptions b;
    if (!opt) return b;
    b.sq_radius_cap = opt->sq_radius_cap;
    b.max_dim = opt->max_dim;
    b.threads = opt->threads;
    b.tol.classify = opt->eps;
    b.tol.general_position = opt->eps_gp;
    return b;
}

Simplex to_simplex(const int32_t* vertices, int32_t n) {
    Simplex s;
    s.reserve(n);
    for (int32_t i = 0; i < n; ++i) s.push_back(vertices[i]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void require_general_position(const WeightedPointSet& X, const BuildOptions& opt, bool skip) {
    if (skip) return;
    auto report = check_general_position(X, opt.tol);
    if (!report.accepted())
        throw DegenerateInput("input is not in general position (" +
                              report.violations.front().describe() +
                              "); consider the perturb command");
}

const char* type_label(dm_complex_type t) {
    switch (t) {
        case DM_COMPLEX_CECH: return "cech";
        case DM_COMPLEX_DELCECH: return "delcech";
        case DM_COMPLEX_DELAUNAY: return "delaunay";
        case DM_COMPLEX_WRAP: return "wrap";
        case DM_COMPLEX_SELECTIVE: return "selective";
    }
    return "?";
}

}  // namespace

extern "C" {

void dm_options_init(dm_options* opt) {
    if (!opt) return;
    opt->sq_radius_cap = HUGE_VAL;
    opt->max_dim = -1;
    opt->threads = 1;
    Tolerances tol;
    opt->eps = tol.classify;
    opt->eps_gp = tol.general_position;
    opt->skip_gp_check = 0;
}

const char* dm_last_error(void) { return g_last_error.c_str(); }

const char* dm_status_name(dm_status status) {
    switch (status) {
        case DM_OK: return "ok";
        case DM_ERR_VERIFY: return "verification failed";
        case DM_ERR_PARSE: return "parse error";
        case DM_ERR_DEGENERATE: return "degenerate input";
        case DM_ERR_INVALID: return "invalid argument";
        default: return "internal error";
    }
}

void dm_string_free(char* s) { std::free(s); }

dm_status dm_points_read(const char* path, dm_points** out) {
    return guarded([&]() {
        if (!path || !out) throw PreconditionViolated("null argument");
        *out = new dm_points_s{read_points_file(path)};
        return DM_OK;
    });
}

dm_status dm_points_parse(const char* text, dm_points** out) {
    return guarded([&]() {
        if (!text || !out) throw PreconditionViolated("null argument");
        std::istringstream in(text);
        *out = new dm_points_s{read_points(in)};
        return DM_OK;
    });
}

dm_status dm_points_write(const dm_points* pts, const char* path) {
    return guarded([&]() {
        if (!pts || !path) throw PreconditionViolated("null argument");
        write_points_file(path, pts->data);
        return DM_OK;
    });
}

int32_t dm_points_count(const dm_points* pts) { return pts ? pts->data.size() : 0; }
int32_t dm_points_dim(const dm_points* pts) { return pts ? pts->data.dim() : 0; }

dm_status dm_points_perturb(const dm_points* pts, double magnitude, uint64_t seed,
                            dm_points** out) {
    return guarded([&]() {
        if (!pts || !out) throw PreconditionViolated("null argument");
        *out = new dm_points_s{perturb(pts->data, magnitude, seed)};
        return DM_OK;
    });
}

dm_status dm_points_check_general_position(const dm_points* pts, double eps_gp,
                                           int32_t* violation_count, char** report) {
    return guarded([&]() {
        if (!pts) throw PreconditionViolated("null argument");
        Tolerances tol;
        if (eps_gp > 0) tol.general_position = eps_gp;
        auto rep = check_general_position(pts->data, tol);
        if (violation_count) *violation_count = static_cast<int32_t>(rep.violations.size());
        if (report) {
            std::ostringstream os;
            for (const auto& v : rep.violations) os << v.describe() << "\n";
            if (!rep.exhaustive) os << "(sampled check; subset budget exceeded)\n";
            *report = copy_string(os.str());
        }
        return DM_OK;
    });
}

void dm_points_free(dm_points* pts) { delete pts; }

dm_status dm_complex_build(const dm_points* pts, dm_complex_type type, const int32_t* selective,
                           int32_t n_selective, const dm_options* opt, dm_complex** out) {
    return guarded([&]() {
        if (!pts || !out) throw PreconditionViolated("null argument");
        if (type != DM_COMPLEX_SELECTIVE && n_selective > 0)
            throw PreconditionViolated("a selective set is only accepted for type 'selective'");
        BuildOptions b = to_build_options(opt);
        require_general_position(pts->data, b, opt && opt->skip_gp_check);
        FilteredComplex K;
        switch (type) {
            case DM_COMPLEX_CECH: K = build_cech(pts->data, b); break;
            case DM_COMPLEX_DELCECH: K = build_delaunay_cech(pts->data, b); break;
            case DM_COMPLEX_DELAUNAY: K = build_delaunay(pts->data, b); break;
            case DM_COMPLEX_WRAP: K = wrap_complex(pts->data, b.sq_radius_cap, b.tol); break;
            case DM_COMPLEX_SELECTIVE: {
                Simplex E = to_simplex(selective, n_selective);
                if (!E.empty() && (E.front() < 0 || E.back() >= pts->data.size()))
                    throw PreconditionViolated("selective set contains an out-of-range vertex");
                K = build_selective_delaunay(pts->data, E, b);
                break;
            }
            default: throw PreconditionViolated("unknown complex type");
        }
        *out = new dm_complex_s{std::move(K)};
        return DM_OK;
    });
}

dm_status dm_complex_read(const char* path, dm_complex** out) {
    return guarded([&]() {
        if (!path || !out) throw PreconditionViolated("null argument");
        *out = new dm_complex_s{read_complex_file(path)};
        return DM_OK;
    });
}

dm_status dm_complex_write(const dm_complex* cx, const char* path) {
    return guarded([&]() {
        if (!cx || !path) throw PreconditionViolated("null argument");
        write_complex_file(path, cx->data);
        return DM_OK;
    });
}

int64_t dm_complex_size(const dm_complex* cx) {
    return cx ? static_cast<int64_t>(cx->data.size()) : 0;
}

dm_status dm_complex_value_of(const dm_complex* cx, const int32_t* vertices, int32_t n_vertices,
                              int32_t* found, double* value) {
    return guarded([&]() {
        if (!cx || !vertices || n_vertices <= 0) throw PreconditionViolated("null argument");
        auto v = cx->data.value_of(to_simplex(vertices, n_vertices));
        if (found) *found = v.has_value() ? 1 : 0;
        if (value && v) *value = *v;
        return DM_OK;
    });
}

void dm_complex_free(dm_complex* cx) { delete cx; }

dm_status dm_gradient_build(const dm_points* pts, const int32_t* selective, int32_t n_selective,
                            int32_t selective_all, const dm_options* opt, dm_gradient** out) {
    return guarded([&]() {
        if (!pts || !out) throw PreconditionViolated("null argument");
        BuildOptions b = to_build_options(opt);
        require_general_position(pts->data, b, opt && opt->skip_gp_check);
        Simplex E = selective_all ? pts->data.all_vertices() : to_simplex(selective, n_selective);
        if (!E.empty() && (E.front() < 0 || E.back() >= pts->data.size()))
            throw PreconditionViolated("selective set contains an out-of-range vertex");
        auto g = new dm_gradient_s;
        g->selective = E;
        g->complex = build_selective_delaunay(pts->data, E, b);
        try {
            g->field = radius_gradient(pts->data, E, g->complex, b.tol);
        } catch (...) {
            delete g;
            throw;
        }
        g->field.complex = &g->complex;
        *out = g;
        return DM_OK;
    });
}

dm_status dm_gradient_write(const dm_gradient* g, const char* path) {
    return guarded([&]() {
        if (!g || !path) throw PreconditionViolated("null argument");
        std::ofstream out(path);
        if (!out) throw ParseError("cannot open '" + std::string(path) + "' for writing");
        write_gradient(out, g->field, g->selective, g->complex.ground_size());
        return DM_OK;
    });
}

int64_t dm_gradient_interval_count(const dm_gradient* g) {
    return g ? static_cast<int64_t>(g->field.intervals.size()) : 0;
}

int64_t dm_gradient_critical_count(const dm_gradient* g) {
    if (!g) return 0;
    int64_t n = 0;
    for (const auto& iv : g->field.intervals) n += iv.singular();
    return n;
}

void dm_gradient_free(dm_gradient* g) { delete g; }

dm_status dm_collapse_build(const dm_points* pts, dm_complex_type from, dm_complex_type to,
                            const dm_options* opt, dm_collapse** out) {
    return guarded([&]() {
        if (!pts || !out) throw PreconditionViolated("null argument");
        if (from == DM_COMPLEX_SELECTIVE || to == DM_COMPLEX_SELECTIVE)
            throw PreconditionViolated("collapse endpoints must be cech, delcech, delaunay or wrap");
        if (static_cast<int>(from) >= static_cast<int>(to))
            throw PreconditionViolated("target complex is not downstream of the source");
        BuildOptions b = to_build_options(opt);
        require_general_position(pts->data, b, opt && opt->skip_gp_check);
        const double cap = b.sq_radius_cap;

        HierarchyPlan plan(pts->data, b.tol);
        FilteredComplex stage_complex[4] = {plan.cech(cap), plan.delcech(cap), plan.delaunay(cap),
                                            plan.wrap(cap)};
        auto c = new dm_collapse_s;
        c->seq.from_label = type_label(from);
        c->seq.to_label = type_label(to);
        c->verified = true;
        for (int s = static_cast<int>(from); s < static_cast<int>(to); ++s) {
            CollapseSequence part;
            switch (s) {
                case 0: part = plan.cech_to_delcech(cap); break;
                case 1: part = plan.delcech_to_del(cap); break;
                default: part = plan.del_to_wrap(cap); break;
            }
            auto v = verify_collapse(stage_complex[s], part, stage_complex[s + 1]);
            if (!v.ok) {
                c->verified = false;
                c->failure = "stage " + std::to_string(s) + " failed at step " +
                             std::to_string(v.failing_step) + ": " + v.reason;
            }
            c->seq.steps.insert(c->seq.steps.end(), part.steps.begin(), part.steps.end());
        }
        *out = c;
        if (!c->verified) {
            set_error(c->failure);
            return DM_ERR_VERIFY;
        }
        return DM_OK;
    });
}

int64_t dm_collapse_step_count(const dm_collapse* c) {
    return c ? static_cast<int64_t>(c->seq.steps.size()) : 0;
}

int32_t dm_collapse_verified(const dm_collapse* c) { return c && c->verified ? 1 : 0; }

dm_status dm_collapse_write(const dm_collapse* c, const char* path) {
    return guarded([&]() {
        if (!c || !path) throw PreconditionViolated("null argument");
        write_collapse_file(path, c->seq);
        return DM_OK;
    });
}

void dm_collapse_free(dm_collapse* c) { delete c; }

dm_status dm_barcode_compute(const dm_complex* cx, dm_barcode** out) {
    return guarded([&]() {
        if (!cx || !out) throw PreconditionViolated("null argument");
        *out = new dm_barcode_s{compute_barcode(cx->data)};
        return DM_OK;
    });
}

dm_status dm_barcode_write(const dm_barcode* bc, const char* path) {
    return guarded([&]() {
        if (!bc || !path) throw PreconditionViolated("null argument");
        write_barcode_file(path, bc->data);
        return DM_OK;
    });
}

int64_t dm_barcode_size(const dm_barcode* bc) {
    return bc ? static_cast<int64_t>(bc->data.bars.size()) : 0;
}

dm_status dm_barcode_equal(const dm_barcode* const* barcodes, int32_t count, double tol,
                           int32_t* equal, char** diff) {
    return guarded([&]() {
        if (!barcodes || count < 2) throw PreconditionViolated("need at least two barcodes");
        std::vector<Barcode> bcs;
        for (int32_t i = 0; i < count; ++i) {
            if (!barcodes[i]) throw PreconditionViolated("null barcode");
            bcs.push_back(barcodes[i]->data);
        }
        auto cmp = compare_barcodes(bcs, {}, tol > 0 ? tol : 1e-9);
        if (equal) *equal = cmp.equal ? 1 : 0;
        if (diff) *diff = copy_string(cmp.diff);
        return DM_OK;
    });
}

void dm_barcode_free(dm_barcode* bc) { delete bc; }

dm_status dm_zigzag_connect(const dm_points* x, const dm_points* y, const dm_options* opt,
                            int32_t* all_hold, char** report) {
    return guarded([&]() {
        if (!x || !y) throw PreconditionViolated("null argument");
        BuildOptions b = to_build_options(opt);
        auto rep = zigzag_connect(x->data, y->data, b.sq_radius_cap, b.tol);
        if (all_hold) *all_hold = rep.all_hold() ? 1 : 0;
        if (report) *report = copy_string(rep.summary());
        return DM_OK;
    });
}

}  // extern "C"
