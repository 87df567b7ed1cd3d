#include "gateroots/format.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gateroots {

namespace {

using ordered_json = nlohmann::ordered_json;

// Values that round to zero at 6 decimals print without a sign.
double clean6(double x) { return std::abs(x) < 5e-7 ? 0.0 : x; }

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", clean6(x));
  return buf;
}

std::string text_entry(Complex z) {
  const double im = clean6(z.imag());
  return fixed6(z.real()) + (std::signbit(im) ? "-" : "+") + fixed6(std::abs(im)) + "i";
}

// 6-decimal value with trailing zeros trimmed: 0.500000 -> 0.5, 1.000000 -> 1.
std::string compact6(double x) {
  std::string s = fixed6(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string latex_entry(Complex z) {
  const double re = clean6(z.real());
  const double im = clean6(z.imag());
  if (im == 0.0) return compact6(re);
  std::string imag;
  const std::string mag = compact6(std::abs(im));
  imag = (mag == "1" ? "" : mag) + "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag;
  return compact6(re) + (im < 0 ? "-" : "+") + imag;
}

std::string json_pair(Complex z) { return "[" + json_number(z.real()) + "," + json_number(z.imag()) + "]"; }

std::string json_pairs(std::span<const Complex> values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += json_pair(values[k]);
  }
  return out + "]";
}

std::string residual_text(double r) {
  if (std::isinf(r)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string latex_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '_': case '&': case '%': case '$': case '#': case '{': case '}':
        out += '\\';
        out += ch;
        break;
      case '^': out += "\\^{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += ch;
    }
  }
  return out;
}

[[noreturn]] void rethrow_json(const nlohmann::json::parse_error& e, std::string_view text) {
  const std::size_t at = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
  std::string snippet(text);
  snippet += '\n';
  snippet.append(at, ' ');
  snippet += '^';
  throw ParseError(at, std::string("invalid JSON: ") + e.what(), std::move(snippet));
}

Complex pair_from_json(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw std::invalid_argument("expected a [re, im] pair of numbers, got " + v.dump());
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

std::optional<Format> format_from_string(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  return std::nullopt;
}

std::string json_number(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string format_matrix(const SquareMatrix& m, Format format) {
  const std::size_t n = m.dim();
  switch (format) {
    case Format::Json:
      return "{\"dim\":" + std::to_string(n) + ",\"entries\":" + json_pairs(m.entries()) + "}\n";
    case Format::Latex: {
      std::string out = "\\begin{pmatrix}\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out += (j ? " & " : "") + latex_entry(m(i, j));
        out += i + 1 < n ? " \\\\\n" : "\n";
      }
      return out + "\\end{pmatrix}\n";
    }
    case Format::Text: {
      std::vector<std::string> cells;
      std::size_t width = 0;
      for (const Complex& z : m.entries()) {
        cells.push_back(text_entry(z));
        width = std::max(width, cells.back().size());
      }
      std::string out;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const std::string& c = cells[i * n + j];
          out += std::string(width - c.size() + 2, ' ') + c;
        }
        out += '\n';
      }
      return out;
    }
  }
  return {};
}

std::string format_state(const StateVector& psi, Format format) {
  const std::size_t qubits = static_cast<std::size_t>(std::countr_zero(psi.dim()));
  switch (format) {
    case Format::Json:
      return "{\"dim\":" + std::to_string(psi.dim()) + ",\"amplitudes\":" + json_pairs(psi.amplitudes()) + "}\n";
    case Format::Latex: {
      std::string out = "\\begin{pmatrix}\n";
      for (std::size_t k = 0; k < psi.dim(); ++k) out += latex_entry(psi[k]) + (k + 1 < psi.dim() ? " \\\\\n" : "\n");
      return out + "\\end{pmatrix}\n";
    }
    case Format::Text: {
      std::string out;
      for (std::size_t k = 0; k < psi.dim(); ++k)
        out += "|" + BasisState::from_index(k, qubits).to_string() + ">  " + text_entry(psi[k]) + "\n";
      return out;
    }
  }
  return {};
}

std::string format_report(const VerificationReport& report, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json out = ordered_json::array();
      for (const ClaimResult& r : report.results) {
        ordered_json item;
        item["claim_id"] = r.id;
        item["description"] = r.description;
        item["reference"] = r.reference;
        if (std::isinf(r.residual)) {
          item["residual"] = "inf";
        } else {
          item["residual"] = r.residual;
        }
        item["tolerance"] = r.tolerance;
        item["observed_status"] = std::string(to_string(r.observed));
        item["expected_status"] = std::string(to_string(r.expected));
        item["matches_expected"] = r.matches_expected;
        out.push_back(std::move(item));
      }
      return out.dump(2) + "\n";
    }
    case Format::Latex: {
      std::string out = "\\begin{tabular}{llllc}\n\\hline\nclaim & residual & observed & expected & match \\\\\n\\hline\n";
      for (const ClaimResult& r : report.results) {
        out += latex_escape(r.id) + " & " + residual_text(r.residual) + " & " + std::string(to_string(r.observed)) +
               " & " + std::string(to_string(r.expected)) + " & " + (r.matches_expected ? "yes" : "no") + " \\\\\n";
      }
      return out + "\\hline\n\\end{tabular}\n";
    }
    case Format::Text: {
      std::size_t width = 0;
      for (const ClaimResult& r : report.results) width = std::max(width, r.id.size());
      std::string out;
      for (const ClaimResult& r : report.results) {
        out += std::string(r.matches_expected ? "ok   " : "FAIL ") + pad(r.id, width) + "  " +
               std::string(to_string(r.observed)) + " (expected " + std::string(to_string(r.expected)) +
               ")  residual " + residual_text(r.residual);
        if (!r.error.empty()) out += "  [" + r.error + "]";
        out += '\n';
      }
      std::ostringstream summary;
      summary << report.results.size() << " claims: " << report.holds << " HOLDS, " << report.fails << " FAILS, "
              << report.mismatches << " unexpected; " << (report.overall_ok ? "OK" : "MISMATCH") << '\n';
      return out + summary.str();
    }
  }
  return {};
}

std::string format_claims_list(const std::vector<Claim>& claims, Format format) {
  switch (format) {
    case Format::Json: {
      ordered_json out = ordered_json::array();
      for (const Claim& c : claims) {
        ordered_json item;
        item["claim_id"] = c.id;
        item["description"] = c.description;
        item["reference"] = c.reference;
        item["lhs"] = c.lhs.text;
        item["rhs"] = c.rhs.text;
        item["expected_status"] = std::string(to_string(c.expected));
        out.push_back(std::move(item));
      }
      return out.dump(2) + "\n";
    }
    case Format::Latex: {
      std::string out = "\\begin{tabular}{lll}\n\\hline\nclaim & expected & identity \\\\\n\\hline\n";
      for (const Claim& c : claims) {
        out += latex_escape(c.id) + " & " + std::string(to_string(c.expected)) + " & \\verb|" + c.lhs.text + " = " +
               c.rhs.text + "| \\\\\n";
      }
      return out + "\\hline\n\\end{tabular}\n";
    }
    case Format::Text: {
      std::size_t width = 0;
      for (const Claim& c : claims) width = std::max(width, c.id.size());
      std::string out;
      for (const Claim& c : claims)
        out += pad(c.id, width) + "  " + std::string(to_string(c.expected)) + "  " + c.description + "\n";
      return out;
    }
  }
  return {};
}

SquareMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_json(e, text);
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries") || !doc["dim"].is_number_unsigned() ||
      !doc["entries"].is_array()) {
    throw std::invalid_argument("matrix JSON needs an unsigned \"dim\" and an \"entries\" array");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<Complex> entries;
  for (const auto& v : doc["entries"]) entries.push_back(pair_from_json(v));
  return SquareMatrix(dim, std::move(entries));
}

StateVector state_from_amplitudes_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_json(e, text);
  }
  if (!doc.is_array()) throw std::invalid_argument("amplitudes must be a JSON array of [re, im] pairs");
  std::vector<Complex> amps;
  double sum = 0.0;
  for (const auto& v : doc) {
    amps.push_back(pair_from_json(v));
    sum += std::norm(amps.back());
  }
  const std::size_t n = amps.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("amplitude count must be a power of two (at least 2), got " + std::to_string(n));
  }
  const double norm = std::sqrt(sum);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
    throw std::invalid_argument("amplitudes have norm " + std::to_string(norm) + "; expected 1 within 1e-6");
  }
  for (Complex& z : amps) z /= norm;
  return StateVector(std::move(amps));
}

}  // namespace gateroots
