#include "gateroots/gateroots.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gateroots/claims.hpp"
#include "gateroots/expr.hpp"
#include "gateroots/format.hpp"
#include "gateroots/involution.hpp"

using namespace gateroots;

struct gr_expr {
  GateExprPtr expr;
};
struct gr_matrix {
  SquareMatrix value;
};
struct gr_state {
  StateVector value;
};
struct gr_report {
  VerificationReport value;
};

namespace {

struct LastError {
  std::string message;
  std::string snippet;
  long offset = -1;
};

thread_local LastError last_error;

gr_status set_error(gr_status status, std::string message, long offset = -1, std::string snippet = {}) {
  last_error = {std::move(message), std::move(snippet), offset};
  return status;
}

class NullArgument : public std::invalid_argument {
 public:
  explicit NullArgument(const char* what) : std::invalid_argument(std::string(what) + " must not be NULL") {}
};

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw NullArgument(name);
}

// Runs fn and converts any exception into a status + thread-local message.
template <class F>
gr_status guarded(F&& fn) noexcept {
  try {
    last_error = {};
    fn();
    return GR_OK;
  } catch (const ParseError& e) {
    return set_error(GR_ERR_PARSE, e.what(), static_cast<long>(e.position()), e.snippet());
  } catch (const DomainError& e) {
    return set_error(GR_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(GR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(GR_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(GR_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format to_format(gr_format format) {
  switch (format) {
    case GR_FORMAT_TEXT: return Format::Text;
    case GR_FORMAT_JSON: return Format::Json;
    case GR_FORMAT_LATEX: return Format::Latex;
  }
  throw std::invalid_argument("unknown output format");
}

}  // namespace

extern "C" {

const char* gr_version(void) { return "0.1.0"; }

const char* gr_last_error(void) { return last_error.message.c_str(); }
long gr_last_error_offset(void) { return last_error.offset; }
const char* gr_last_error_snippet(void) { return last_error.snippet.c_str(); }

void gr_string_free(char* s) { std::free(s); }

gr_status gr_expr_parse(const char* text, gr_expr** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new gr_expr{parse_expr(text)};
  });
}

gr_status gr_expr_to_string(const gr_expr* expr, char** out) {
  return guarded([&] {
    require(expr, "expr");
    require(out, "out");
    *out = copy_string(to_string(*expr->expr));
  });
}

gr_status gr_expr_evaluate(const gr_expr* expr, gr_matrix** out) {
  return guarded([&] {
    require(expr, "expr");
    require(out, "out");
    *out = new gr_matrix{evaluate(*expr->expr).matrix()};
  });
}

void gr_expr_free(gr_expr* expr) { delete expr; }

gr_status gr_matrix_from_gate(const char* name, gr_matrix** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto g = gate_from_string(name);
    if (!g) throw std::invalid_argument(std::string("unknown gate name '") + name + "'");
    *out = new gr_matrix{gate(*g).matrix()};
  });
}

gr_status gr_matrix_from_json(const char* json, gr_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gr_matrix{matrix_from_json(json)};
  });
}

size_t gr_matrix_dim(const gr_matrix* m) { return m ? m->value.dim() : 0; }

gr_status gr_matrix_entry(const gr_matrix* m, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    require(m, "m");
    require(re, "re");
    require(im, "im");
    if (row >= m->value.dim() || col >= m->value.dim()) throw std::invalid_argument("matrix index out of range");
    *re = m->value(row, col).real();
    *im = m->value(row, col).imag();
  });
}

gr_status gr_matrix_format(const gr_matrix* m, gr_format format, char** out) {
  return guarded([&] {
    require(m, "m");
    require(out, "out");
    *out = copy_string(format_matrix(m->value, to_format(format)));
  });
}

gr_status gr_matrix_is_involution(const gr_matrix* m, double tol, int* out) {
  return guarded([&] {
    require(m, "m");
    require(out, "out");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    *out = is_involution(m->value, tol) ? 1 : 0;
  });
}

gr_status gr_root(const gr_matrix* m, unsigned n, gr_root_method method, gr_matrix** out, gr_root_method* used) {
  return guarded([&] {
    require(m, "m");
    require(out, "out");
    const UnitaryGate u(m->value);
    bool closed = false;
    switch (method) {
      case GR_ROOT_AUTO: closed = is_involution(u.matrix(), kPredicateTol); break;
      case GR_ROOT_CLOSED: closed = true; break;
      case GR_ROOT_SPECTRAL: closed = false; break;
      default: throw std::invalid_argument("unknown root method");
    }
    RootResult r = closed ? nth_root_involution(u, n) : principal_root(u, n);
    *out = new gr_matrix{r.root.matrix()};
    if (used) *used = closed ? GR_ROOT_CLOSED : GR_ROOT_SPECTRAL;
  });
}

gr_status gr_generator(const gr_matrix* m, gr_matrix** out) {
  return guarded([&] {
    require(m, "m");
    require(out, "out");
    *out = new gr_matrix{generator(UnitaryGate(m->value)).matrix};
  });
}

void gr_matrix_free(gr_matrix* m) { delete m; }

gr_status gr_state_from_basis(const char* bits, gr_state** out) {
  return guarded([&] {
    require(bits, "bits");
    require(out, "out");
    try {
      *out = new gr_state{StateVector::basis(BasisState::from_string(bits))};
    } catch (const DomainError& e) {
      throw std::invalid_argument(e.what());
    }
  });
}

gr_status gr_state_from_json(const char* json, gr_state** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new gr_state{state_from_amplitudes_json(json)};
  });
}

size_t gr_state_dim(const gr_state* s) { return s ? s->value.dim() : 0; }

gr_status gr_state_amplitude(const gr_state* s, size_t index, double* re, double* im) {
  return guarded([&] {
    require(s, "s");
    require(re, "re");
    require(im, "im");
    if (index >= s->value.dim()) throw std::invalid_argument("state index out of range");
    *re = s->value[index].real();
    *im = s->value[index].imag();
  });
}

gr_status gr_apply(const gr_matrix* gate_matrix, const gr_state* s, gr_state** out) {
  return guarded([&] {
    require(gate_matrix, "gate");
    require(s, "s");
    require(out, "out");
    *out = new gr_state{apply(UnitaryGate(gate_matrix->value), s->value)};
  });
}

gr_status gr_state_format(const gr_state* s, gr_format format, char** out) {
  return guarded([&] {
    require(s, "s");
    require(out, "out");
    *out = copy_string(format_state(s->value, to_format(format)));
  });
}

void gr_state_free(gr_state* s) { delete s; }

gr_status gr_verify(double tol, const char* id_prefix, gr_report** out) {
  return guarded([&] {
    require(out, "out");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    *out = new gr_report{run_all(tol, id_prefix ? id_prefix : "")};
  });
}

int gr_report_ok(const gr_report* r) { return r && r->value.overall_ok ? 1 : 0; }

size_t gr_report_size(const gr_report* r) { return r ? r->value.results.size() : 0; }

gr_status gr_report_format(const gr_report* r, gr_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_string(format_report(r->value, to_format(format)));
  });
}

void gr_report_free(gr_report* r) { delete r; }

gr_status gr_claims_list(gr_format format, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(format_claims_list(builtin_claims(), to_format(format)));
  });
}

}  // extern "C"
