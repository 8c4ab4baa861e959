#include <hkl/hkl.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "error.hpp"
#include "git_quartics.hpp"
#include "niemeier.hpp"
#include "report.hpp"
#include "root_system.hpp"
#include "sl2_decomp.hpp"
#include "toric.hpp"

struct hkl_context {
  std::string data_dir;
  std::uint64_t seed = 1;
  std::optional<std::vector<hkl::niemeier::NiemeierEntry>> catalog;

  const std::vector<hkl::niemeier::NiemeierEntry>& niemeier() {
    if (!catalog) catalog = hkl::niemeier::load_catalog(data_dir + "/niemeier.json");
    return *catalog;
  }
};

struct hkl_lattice {
  hkl::lattice::IntegralLattice value;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hkl_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return HKL_OK;
  } catch (const hkl::Error& e) {
    g_last_error = e.what();
    return static_cast<hkl_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return HKL_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) hkl::fail(hkl::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hkl_status emit(char** out, hkl_format fmt, const std::function<std::vector<hkl::report::Table>()>& make) {
  return guard([&] {
    need(out, "out");
    auto tables = make();
    *out = dup(fmt == HKL_FORMAT_JSON ? hkl::report::render_json(tables) : hkl::report::render_tsv(tables));
  });
}

hkl_status emit1(char** out, hkl_format fmt, const std::function<hkl::report::Table()>& make) {
  return emit(out, fmt, [&] { return std::vector<hkl::report::Table>{make()}; });
}

std::vector<hkl::Rational> parse_point(const char* text) {
  std::vector<hkl::Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(hkl::parse_rational(item));
  return v;
}

}  // namespace

extern "C" {

const char* hkl_last_error(void) { return g_last_error.c_str(); }
const char* hkl_version(void) { return "1.0.0"; }
void hkl_string_free(char* s) { std::free(s); }

hkl_status hkl_context_new(const char* data_dir, uint64_t seed, hkl_context** out) {
  return guard([&] {
    need(out, "out");
    auto ctx = std::make_unique<hkl_context>();
    ctx->data_dir = data_dir ? data_dir : "./data";
    ctx->seed = seed;
    *out = ctx.release();
  });
}

void hkl_context_free(hkl_context* ctx) { delete ctx; }

hkl_status hkl_lattice_parse(const char* spec, hkl_lattice** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new hkl_lattice{hkl::lattice::parse_lattice_spec(spec)};
  });
}

void hkl_lattice_free(hkl_lattice* l) { delete l; }

hkl_status hkl_lattice_rank(const hkl_lattice* l, size_t* out) {
  return guard([&] {
    need(l, "lattice");
    need(out, "out");
    *out = l->value.rank();
  });
}

hkl_status hkl_lattice_invariants_match(const hkl_lattice* a, const hkl_lattice* b, int* out) {
  return guard([&] {
    need(a, "lattice a");
    need(b, "lattice b");
    need(out, "out");
    *out = hkl::lattice::invariants_match(a->value, b->value) ? 1 : 0;
  });
}

hkl_status hkl_lattice_root_count(const hkl_lattice* l, size_t* out) {
  return guard([&] {
    need(l, "lattice");
    need(out, "out");
    *out = hkl::lattice::classify_root_sublattice(l->value).root_count;
  });
}

hkl_status hkl_lattice_invariants(const char* spec, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(spec, "spec");
    return hkl::report::lattice_invariants(spec);
  });
}

hkl_status hkl_lattice_roots(const char* spec, int extended, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(spec, "spec");
    return hkl::report::lattice_roots(spec, extended != 0);
  });
}

hkl_status hkl_niemeier_catalog(hkl_context* ctx, const char* name, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::niemeier_catalog(ctx->niemeier(), name ? name : "");
  });
}

hkl_status hkl_niemeier_labels(hkl_context* ctx, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::niemeier_labels(ctx->niemeier());
  });
}

hkl_status hkl_niemeier_dimensions(hkl_context* ctx, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::boundary_dimensions(ctx->niemeier());
  });
}

hkl_status hkl_niemeier_match(hkl_context* ctx, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::type2_matching(ctx->niemeier());
  });
}

hkl_status hkl_git_zero_weight(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::git_zero_weight(); }); }

hkl_status hkl_git_sigma_dims(hkl_context* ctx, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::git_sigma_dims(ctx->seed);
  });
}

hkl_status hkl_git_mu(const char* quartic, const long weights[4], long* out) {
  return guard([&] {
    need(quartic, "quartic");
    need(weights, "weights");
    need(out, "out");
    auto f = hkl::poly::MultiPoly::parse(quartic, hkl::git::quartic_variables());
    *out = hkl::git::mu(f, hkl::git::OnePS::make({weights[0], weights[1], weights[2], weights[3]}));
  });
}

hkl_status hkl_git_worst_case(const char* quartic, long box, long weights_out[4], long* mu_out) {
  return guard([&] {
    need(quartic, "quartic");
    need(weights_out, "weights_out");
    need(mu_out, "mu_out");
    auto f = hkl::poly::MultiPoly::parse(quartic, hkl::git::quartic_variables());
    auto w = hkl::git::worst_case_search(f, box);
    for (int i = 0; i < 4; ++i) weights_out[i] = w.ps.w[static_cast<std::size_t>(i)];
    *mu_out = w.mu;
  });
}

hkl_status hkl_git_limits(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::git_limit_identities(); }); }

hkl_status hkl_git_e12_example(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::git_e12_example(); }); }

hkl_status hkl_rep_decompose(const int* weights, size_t n, char** out) {
  return guard([&] {
    need(out, "out");
    if (n && !weights) need(weights, "weights");
    std::vector<int> w(weights, weights + n);
    *out = dup(hkl::sl2::decompose(w).to_string());
  });
}

hkl_status hkl_rep_table(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::rep_table(); }); }

hkl_status hkl_rep_tangent(const char* a, const char* b, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(a, "a");
    need(b, "b");
    return hkl::report::rep_tangent(hkl::parse_rational(a), hkl::parse_rational(b));
  });
}

hkl_status hkl_rep_slices(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::rep_slices(); }); }

hkl_status hkl_dolgachev_table(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::dolgachev_table(); }); }

hkl_status hkl_dolgachev_checks(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::dolgachev_checks(); }); }

hkl_status hkl_blowup_fan(hkl_context* ctx, const char* weights, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    need(weights, "weights");
    return hkl::report::blowup_fan(weights, ctx->seed);
  });
}

hkl_status hkl_blowup_fan_json(hkl_context* ctx, const char* weights, char** out) {
  return guard([&] {
    need(ctx, "context");
    need(weights, "weights");
    need(out, "out");
    *out = dup(hkl::toric::build_fan(hkl::toric::parse_weights(weights), ctx->seed).to_json());
  });
}

hkl_status hkl_blowup_wp_equiv(const char* weights, const char* x, const char* y, int* out) {
  return guard([&] {
    need(weights, "weights");
    need(x, "x");
    need(y, "y");
    need(out, "out");
    auto a = hkl::toric::parse_weights(weights);
    *out = hkl::toric::wp_equiv({parse_point(x), a}, {parse_point(y), a}) ? 1 : 0;
  });
}

hkl_status hkl_schedule_table1(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::schedule_table1(); }); }

hkl_status hkl_schedule_betas(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::schedule_betas(); }); }

hkl_status hkl_schedule_flip(const char* beta, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(beta, "beta");
    return hkl::report::schedule_flip(hkl::parse_rational(beta));
  });
}

hkl_status hkl_schedule_strata(const char* type, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] { return hkl::report::schedule_strata(type ? type : ""); });
}

hkl_status hkl_schedule_towers(hkl_format fmt, char** out) { return emit1(out, fmt, [] { return hkl::report::schedule_towers(); }); }

hkl_status hkl_schedule_checks(hkl_context* ctx, hkl_format fmt, char** out) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::schedule_checks(ctx->niemeier(), ctx->seed);
  });
}

hkl_status hkl_report(hkl_context* ctx, hkl_format fmt, char** out) {
  return emit(out, fmt, [&] {
    need(ctx, "context");
    return hkl::report::summary_tables(ctx->niemeier());
  });
}

hkl_status hkl_verify(hkl_context* ctx, hkl_format fmt, char** out, int* failures) {
  return emit1(out, fmt, [&] {
    need(ctx, "context");
    need(failures, "failures");
    auto checks = hkl::report::acceptance_checks(ctx->data_dir, ctx->seed);
    *failures = static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const hkl::Check& c) { return !c.pass; }));
    return hkl::report::checks_table("verify", checks);
  });
}

}  // extern "C"
