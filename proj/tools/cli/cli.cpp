#include "cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "ga3/error.hpp"
#include "ga3/expr.hpp"
#include "ga3/qm.hpp"
#include "ga3/spinor.hpp"

namespace ga3::cli {

namespace {

using nlohmann::json;

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

// Data goes to the file named by cfg.out_path, or to `out` when it is empty.
template <typename Fn>
int with_output(const RunConfig& cfg, std::ostream& out, std::ostream& err, Fn&& write) {
  if (cfg.out_path.empty()) {
    write(out);
    out.flush();
    return exit_code::kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write to '" << cfg.out_path << "'\n";
    return exit_code::kUnwritable;
  }
  write(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << cfg.out_path << "' failed\n";
    return exit_code::kUnwritable;
  }
  return exit_code::kOk;
}

std::string csv_cell(std::optional<double> x) { return x ? format_real(*x) : std::string(); }

json json_cell(std::optional<double> x) { return x ? json(*x) : json(nullptr); }

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("--trials must be at least 1");
  if (cfg.steps < 2) throw ConfigError("--steps must be at least 2");
  if (!std::isfinite(cfg.t_max) || cfg.t_max <= 0.0) throw ConfigError("--t-max must be positive");
  if (!std::isfinite(cfg.hbar) || cfg.hbar <= 0.0) throw ConfigError("--hbar must be positive");
  for (double h : cfg.hamiltonian) {
    if (!std::isfinite(h)) throw ConfigError("--h entries must be finite");
  }
  if (!std::isfinite(cfg.tol_scale) || cfg.tol_scale < 0.0) {
    throw ConfigError("--tol-scale must be non-negative");
  }
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool parse_real(std::string_view text, double& value) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  return res.ec == std::errc{} && res.ptr == text.data() + text.size() && std::isfinite(value);
}

bool parse_hamiltonian(std::string_view text, std::array<double, 4>& h) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) return false;
  std::array<double, 4> parsed{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!parse_real(parts[k], parsed[k])) return false;
  }
  h = parsed;
  return true;
}

int cmd_eval(std::string_view source, std::ostream& out, std::ostream& err) {
  using namespace ga3::expr;
  Multivector value;
  try {
    value = evaluate(*parse(source));
  } catch (const EvalError& e) {
    err << caret_diagnostic(source, e) << '\n';
    return exit_code::kEvalError;
  } catch (const ExprError& e) {
    err << caret_diagnostic(source, e) << '\n';
    return exit_code::kInvalidInput;
  }
  out << to_string(value) << '\n';
  struct Column {
    Blade blade;
    std::string_view name;
  };
  static constexpr std::array<Column, 8> kStandardOrder{{{Blade::Scalar, "1"},
                                                         {Blade::E1, "e1"},
                                                         {Blade::E2, "e2"},
                                                         {Blade::E3, "e3"},
                                                         {Blade::E12, "e12"},
                                                         {Blade::E13, "e13"},
                                                         {Blade::E23, "e23"},
                                                         {Blade::E123, "e123"}}};
  for (std::size_t k = 0; k < kStandardOrder.size(); ++k) {
    const double c = value[kStandardOrder[k].blade];
    out << (k ? " " : "") << kStandardOrder[k].name << '=' << shortest(c == 0.0 ? 0.0 : c);
  }
  out << '\n';
  return exit_code::kOk;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInvalidInput;
  }
  const auto& h = cfg.hamiltonian;
  const Observable H{h[0], Vector3{h[1], h[2], h[3]}};
  EvolutionConfig ec;
  ec.hbar = cfg.hbar;
  ec.t_grid = uniform_grid(cfg.t_max, cfg.steps);
  const auto trajectory = evolve(H, ec);
  std::vector<std::optional<double>> p_e(trajectory.size()), p_mu(trajectory.size());
  if (is_transverse(H)) {
    const auto flavors = neutrino_oscillation(H, ec);
    for (std::size_t k = 0; k < flavors.size(); ++k) {
      p_e[k] = flavors[k].p_electron;
      p_mu[k] = flavors[k].p_muon;
    }
  }

  return with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::Csv) {
      os << kEvolveCsvHeader << '\n';
      for (std::size_t k = 0; k < trajectory.size(); ++k) {
        const auto& s = trajectory[k];
        os << format_real(s.t) << ',' << format_real(s.ket.a0.re) << ','
           << format_real(s.ket.a0.im) << ',' << format_real(s.ket.a1.re) << ','
           << format_real(s.ket.a1.im) << ',' << format_real(s.a_hat.x) << ','
           << format_real(s.a_hat.y) << ',' << format_real(s.a_hat.z) << ',' << csv_cell(p_e[k])
           << ',' << csv_cell(p_mu[k]) << '\n';
      }
      return;
    }
    json rows = json::array();
    for (std::size_t k = 0; k < trajectory.size(); ++k) {
      const auto& s = trajectory[k];
      json row = json::object();
      row["t"] = s.t;
      row["re_a0"] = s.ket.a0.re;
      row["im_a0"] = s.ket.a0.im;
      row["re_a1"] = s.ket.a1.re;
      row["im_a1"] = s.ket.a1.im;
      row["ax"] = s.a_hat.x;
      row["ay"] = s.a_hat.y;
      row["az"] = s.a_hat.z;
      row["p_e"] = json_cell(p_e[k]);
      row["p_mu"] = json_cell(p_mu[k]);
      rows.push_back(std::move(row));
    }
    os << rows.dump(2) << '\n';
  });
}

int cmd_project(const RunConfig& cfg, const std::vector<std::string>& rows, std::ostream& out,
                std::ostream& err) {
  struct Projected {
    KetSpinor ket;
    std::optional<double> x, y;
    std::optional<Vector3> a_hat;
    std::string flag;
  };
  std::vector<Projected> results;
  for (std::size_t line = 0; line < rows.size(); ++line) {
    const std::string_view text = trim(rows[line]);
    if (text.empty() || text.front() == '#') continue;
    const auto parts = split(text, ',');
    std::array<double, 4> v{};
    bool ok = parts.size() == 4;
    for (std::size_t k = 0; ok && k < 4; ++k) ok = parse_real(parts[k], v[k]);
    if (!ok) {
      err << "error: row " << line + 1 << ": expected re_a0,im_a0,re_a1,im_a1, got '" << text
          << "'\n";
      return exit_code::kInvalidInput;
    }
    Projected p{KetSpinor{{v[0], v[1]}, {v[2], v[3]}}, {}, {}, {}, {}};
    try {
      p.a_hat = a_hat_from_ket(p.ket);
      const PlanePoint pt = stereographic_project(idempotent_from_ket(p.ket).m());
      p.x = pt.x;
      p.y = pt.y;
    } catch (const Error& e) {
      p.flag = e.code() == Errc::ZeroAlpha0 ? "south_pole" : "zero_spinor";
    }
    results.push_back(std::move(p));
  }

  return with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::Csv) {
      os << kProjectCsvHeader << '\n';
      for (const auto& p : results) {
        const auto a = p.a_hat.value_or(Vector3{});
        const bool has_a = p.a_hat.has_value();
        os << format_real(p.ket.a0.re) << ',' << format_real(p.ket.a0.im) << ','
           << format_real(p.ket.a1.re) << ',' << format_real(p.ket.a1.im) << ',' << csv_cell(p.x)
           << ',' << csv_cell(p.y) << ',' << csv_cell(has_a ? std::optional(a.x) : std::nullopt)
           << ',' << csv_cell(has_a ? std::optional(a.y) : std::nullopt) << ','
           << csv_cell(has_a ? std::optional(a.z) : std::nullopt) << ',' << p.flag << '\n';
      }
      return;
    }
    json arr = json::array();
    for (const auto& p : results) {
      json row = json::object();
      row["re_a0"] = p.ket.a0.re;
      row["im_a0"] = p.ket.a0.im;
      row["re_a1"] = p.ket.a1.re;
      row["im_a1"] = p.ket.a1.im;
      row["x"] = json_cell(p.x);
      row["y"] = json_cell(p.y);
      row["ax"] = p.a_hat ? json(p.a_hat->x) : json(nullptr);
      row["ay"] = p.a_hat ? json(p.a_hat->y) : json(nullptr);
      row["az"] = p.a_hat ? json(p.a_hat->z) : json(nullptr);
      row["flag"] = p.flag.empty() ? json(nullptr) : json(p.flag);
      arr.push_back(std::move(row));
    }
    os << arr.dump(2) << '\n';
  });
}

}  // namespace ga3::cli
