#include "fiberprod.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "pipeline.hpp"

using namespace fp;

struct fp_session {
  PipelineOptions opts;
  std::string spec_text;
  bool has_spec = false;
  std::optional<Report> report;
  std::string error;
};

namespace {

fp_status status_from(Errc c) {
  switch (c) {
    case Errc::ok: return FP_OK;
    case Errc::inconsistent: return FP_ERR_DISAGREEMENT;
    case Errc::parse: return FP_ERR_PARSE;
    case Errc::missing_betti: return FP_ERR_MISSING_BETTI;
    case Errc::oracle_unsupported: return FP_ERR_ORACLE_UNSUPPORTED;
    case Errc::range: return FP_ERR_RANGE;
    case Errc::bad_argument: return FP_ERR_BAD_ARGUMENT;
    case Errc::no_result: return FP_ERR_NO_RESULT;
    case Errc::internal: return FP_ERR_INTERNAL;
  }
  return FP_ERR_INTERNAL;
}

template <typename F>
fp_status guarded(fp_session* s, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (s) s->error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    if (s) s->error = e.what();
    return FP_ERR_INTERNAL;
  }
}

bool parse_size(const std::string& v, unsigned long long& out) {
  if (v.empty() || v.size() > 18 || v.find_first_not_of("0123456789") != std::string::npos)
    return false;
  out = std::stoull(v);
  return true;
}

}  // namespace

extern "C" {

fp_session* fp_session_new(void) {
  return new (std::nothrow) fp_session();
}

void fp_session_free(fp_session* s) {
  delete s;
}

fp_status fp_session_set_option(fp_session* s, const char* key, const char* value) {
  if (!s || !key || !value) return FP_ERR_BAD_ARGUMENT;
  return guarded(s, [&]() -> fp_status {
    std::string k = key, v = value;
    unsigned long long num = 0;
    if (k == "field") {
      s->opts.field = parse_field_flag(v);
    } else if (k == "max-gens") {
      if (!parse_size(v, num) || num == 0) return FP_ERR_BAD_ARGUMENT;
      s->opts.max_gens = static_cast<size_t>(num);
    } else if (k == "max-degree") {
      if (!parse_size(v, num) || num == 0) return FP_ERR_BAD_ARGUMENT;
      s->opts.max_degree = static_cast<long>(num);
    } else if (k == "seed") {
      if (!parse_size(v, num)) return FP_ERR_BAD_ARGUMENT;
      s->opts.seed = num;
    } else if (k == "oracle") {
      if (v != "0" && v != "1") return FP_ERR_BAD_ARGUMENT;
      s->opts.with_oracle = (v == "1");
    } else {
      s->error = "unknown option '" + k + "'";
      return FP_ERR_BAD_ARGUMENT;
    }
    return FP_OK;
  });
}

fp_status fp_session_load_spec_text(fp_session* s, const char* text) {
  if (!s || !text) return FP_ERR_BAD_ARGUMENT;
  s->spec_text = text;
  s->has_spec = true;
  s->report.reset();
  return FP_OK;
}

fp_status fp_session_load_spec_file(fp_session* s, const char* path) {
  if (!s || !path) return FP_ERR_BAD_ARGUMENT;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    s->error = std::string("cannot open spec file '") + path + "'";
    return FP_ERR_PARSE;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  s->spec_text = buf.str();
  s->has_spec = true;
  s->report.reset();
  return FP_OK;
}

fp_status fp_run(fp_session* s, const char* command) {
  if (!s || !command) return FP_ERR_BAD_ARGUMENT;
  if (!s->has_spec) {
    s->error = "no spec loaded";
    return FP_ERR_NO_RESULT;
  }
  return guarded(s, [&]() -> fp_status {
    Command cmd = parse_command(command);
    s->report = run_pipeline(cmd, s->spec_text, s->opts);
    s->error.clear();
    return FP_OK;
  });
}

const char* fp_last_error(const fp_session* s) {
  return s ? s->error.c_str() : "null session";
}

const char* fp_report_text(const fp_session* s) {
  return s && s->report ? s->report->text.c_str() : "";
}

const char* fp_report_json(const fp_session* s) {
  return s && s->report ? s->report->json.c_str() : "";
}

int fp_exit_code(const fp_session* s) {
  return s && s->report ? s->report->exit_code : FP_ERR_NO_RESULT;
}

fp_status fp_get_pq(const fp_session* s, int32_t* p, int32_t* q) {
  if (!s || !p || !q) return FP_ERR_BAD_ARGUMENT;
  if (!s->report) return FP_ERR_NO_RESULT;
  *p = s->report->split_I.p;
  *q = s->report->split_Iprime.p;
  return FP_OK;
}

fp_status fp_get_sequence(const fp_session* s, const char* key, uint64_t* buf, size_t cap,
                          size_t* out_len) {
  if (!s || !key || !out_len || (cap > 0 && !buf)) return FP_ERR_BAD_ARGUMENT;
  if (!s->report) return FP_ERR_NO_RESULT;
  const Report& r = *s->report;
  std::string k = key;
  const IntSeq* seq = nullptr;
  if (k == "betti_formula" && r.betti_formula) seq = &*r.betti_formula;
  else if (k == "betti_oracle" && r.betti_oracle) seq = &*r.betti_oracle;
  else if (k == "betti_J" && r.betti_J) seq = &*r.betti_J;
  else if (k == "betti_J'" && r.betti_Jprime) seq = &*r.betti_Jprime;
  else if (k == "poincare" && r.poincare) seq = &*r.poincare;
  else if (k == "cone_ranks" && r.cone) seq = &*r.cone;
  if (!seq) return FP_ERR_NO_RESULT;
  *out_len = seq->size();
  if (seq->size() > cap) return FP_ERR_RANGE;
  static_assert(sizeof(unsigned long) == sizeof(uint64_t), "LP64 assumed");
  for (size_t i = 0; i < seq->size(); ++i) {
    const Integer& v = (*seq)[i];
    if (sgn(v) < 0 || !v.fits_ulong_p()) return FP_ERR_RANGE;
    buf[i] = static_cast<uint64_t>(v.get_ui());
  }
  return FP_OK;
}

const char* fp_library_version(void) {
  return "1.0.0";
}

}  // extern "C"
