// gateroots: command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "gateroots/gateroots.h"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kDomain = 3, kInternal = 4 };

struct Deleter {
  void operator()(gr_expr* p) const { gr_expr_free(p); }
  void operator()(gr_matrix* p) const { gr_matrix_free(p); }
  void operator()(gr_state* p) const { gr_state_free(p); }
  void operator()(gr_report* p) const { gr_report_free(p); }
  void operator()(char* p) const { gr_string_free(p); }
};

template <class T>
using Owned = std::unique_ptr<T, Deleter>;

struct Failure {
  int code;
};

// Reports the last C API error on stderr and unwinds to main.
void check(gr_status status) {
  if (status == GR_OK) return;
  std::cerr << "error: " << gr_last_error() << '\n';
  if (status == GR_ERR_PARSE) {
    std::cerr << "  at offset " << gr_last_error_offset() << ":\n";
    std::string snippet = gr_last_error_snippet();
    std::size_t start = 0;
    while (start <= snippet.size()) {
      const std::size_t end = snippet.find('\n', start);
      std::cerr << "    " << snippet.substr(start, end - start) << '\n';
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  switch (status) {
    case GR_ERR_PARSE:
    case GR_ERR_INVALID_ARGUMENT: throw Failure{kUsage};
    case GR_ERR_DOMAIN: throw Failure{kDomain};
    default: throw Failure{kInternal};
  }
}

void emit(char* text) {
  Owned<char> owned(text);
  std::fputs(owned.get(), stdout);
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

Owned<gr_matrix> evaluate(const std::vector<std::string>& tokens) {
  gr_expr* raw = nullptr;
  check(gr_expr_parse(join(tokens).c_str(), &raw));
  Owned<gr_expr> expr(raw);
  gr_matrix* m = nullptr;
  check(gr_expr_evaluate(expr.get(), &m));
  return Owned<gr_matrix>(m);
}

struct Options {
  std::string format = "text";
  std::vector<std::string> expr;
  unsigned n = 0;
  std::string method = "auto";
  std::string basis;
  std::string amplitudes;
  double tol = 1e-10;
  std::string filter;
};

gr_format format_of(const std::string& name) {
  if (name == "json") return GR_FORMAT_JSON;
  if (name == "latex") return GR_FORMAT_LATEX;
  return GR_FORMAT_TEXT;
}

gr_root_method method_of(const std::string& name) {
  if (name == "closed") return GR_ROOT_CLOSED;
  if (name == "spectral") return GR_ROOT_SPECTRAL;
  return GR_ROOT_AUTO;
}

int run_show(const Options& o) {
  auto m = evaluate(o.expr);
  char* out = nullptr;
  check(gr_matrix_format(m.get(), format_of(o.format), &out));
  emit(out);
  return kOk;
}

int run_root(const Options& o) {
  auto m = evaluate(o.expr);
  gr_matrix* raw = nullptr;
  check(gr_root(m.get(), o.n, method_of(o.method), &raw, nullptr));
  Owned<gr_matrix> root(raw);
  char* out = nullptr;
  check(gr_matrix_format(root.get(), format_of(o.format), &out));
  emit(out);
  return kOk;
}

int run_generator(const Options& o) {
  auto m = evaluate(o.expr);
  gr_matrix* raw = nullptr;
  check(gr_generator(m.get(), &raw));
  Owned<gr_matrix> g(raw);
  char* out = nullptr;
  check(gr_matrix_format(g.get(), format_of(o.format), &out));
  emit(out);
  return kOk;
}

int run_apply(const Options& o) {
  if (o.basis.empty() == o.amplitudes.empty()) {
    std::cerr << "error: apply needs exactly one of --basis or --amplitudes\n";
    return kUsage;
  }
  auto m = evaluate(o.expr);
  gr_state* raw = nullptr;
  if (!o.basis.empty()) {
    check(gr_state_from_basis(o.basis.c_str(), &raw));
  } else {
    check(gr_state_from_json(o.amplitudes.c_str(), &raw));
  }
  Owned<gr_state> psi(raw);
  gr_state* result = nullptr;
  check(gr_apply(m.get(), psi.get(), &result));
  Owned<gr_state> phi(result);
  char* out = nullptr;
  check(gr_state_format(phi.get(), format_of(o.format), &out));
  emit(out);
  return kOk;
}

int run_verify(const Options& o) {
  gr_report* raw = nullptr;
  check(gr_verify(o.tol, o.filter.c_str(), &raw));
  Owned<gr_report> report(raw);
  if (gr_report_size(report.get()) == 0) {
    std::cerr << "error: no claim id starts with '" << o.filter << "'\n";
    return kUsage;
  }
  char* out = nullptr;
  check(gr_report_format(report.get(), format_of(o.format), &out));
  emit(out);
  return gr_report_ok(report.get()) ? kOk : kMismatch;
}

int run_claims_list(const Options& o) {
  char* out = nullptr;
  check(gr_claims_list(format_of(o.format), &out));
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Generators and roots of self-inverse quantum gates"};
  app.set_version_flag("--version", std::string(gr_version()));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("expr", o.expr, "Gate expression, e.g. \"sqrt(X) x H\"")->required()->expected(1, -1);
  };

  CLI::App* show = app.add_subcommand("show", "Print the matrix of a gate expression");
  add_expr(show);

  CLI::App* root = app.add_subcommand("root", "n-th root of a gate expression");
  add_expr(root);
  root->add_option("--n", o.n, "Root order")->required()->check(CLI::Range(1u, 64u));
  root->add_option("--method", o.method, "Root construction")
      ->check(CLI::IsMember({"auto", "closed", "spectral"}));

  CLI::App* gen = app.add_subcommand("generator", "Hermitian generator (pi/2)(I - A) of an involution");
  add_expr(gen);

  CLI::App* apply = app.add_subcommand("apply", "Apply a gate expression to a state");
  add_expr(apply);
  auto* basis = apply->add_option("--basis", o.basis, "Basis state as a bit string, most significant qubit first");
  auto* amps = apply->add_option("--amplitudes", o.amplitudes, "JSON array of [re, im] pairs");
  basis->excludes(amps);

  CLI::App* verify = app.add_subcommand("verify", "Evaluate the built-in identity registry");
  verify->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--filter", o.filter, "Only claims whose id starts with this prefix");

  CLI::App* list = app.add_subcommand("claims-list", "List the built-in claims");

  for (CLI::App* sub : {show, root, gen, apply, verify, list}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*show) return run_show(o);
    if (*root) return run_root(o);
    if (*gen) return run_generator(o);
    if (*apply) return run_apply(o);
    if (*verify) return run_verify(o);
    if (*list) return run_claims_list(o);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
