#include "composig/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace composig {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string render_csv(const Table& table) {
  std::string out;
  for (size_t c = 0; c < table.header.size(); ++c) {
    if (c) out.push_back(',');
    out += table.header[c];
  }
  out.push_back('\n');
  const size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out.push_back(',');
      out += format_double(table.columns[c][r]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

std::string render_svg(const Table& table, const std::string& title) {
  constexpr int width = 720, height = 480, margin = 48;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf"};
  if (table.columns.size() < 2 || table.columns.front().empty()) return "<svg/>";

  const auto& x = table.columns.front();
  double xmin = *std::min_element(x.begin(), x.end());
  double xmax = *std::max_element(x.begin(), x.end());
  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
  for (size_t c = 1; c < table.columns.size(); ++c)
    for (double v : table.columns[c]) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  auto px = [&](double v) { return margin + (width - 2 * margin) * (v - xmin) / (xmax - xmin); };
  auto py = [&](double v) { return height - margin - (height - 2 * margin) * (v - ymin) / (ymax - ymin); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << title << "</text>\n";
  svg << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << width - 2 * margin
      << "\" height=\"" << height - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (size_t c = 1; c < table.columns.size(); ++c) {
    svg << "<polyline fill=\"none\" stroke=\"" << palette[(c - 1) % 7]
        << "\" stroke-width=\"1.2\" points=\"";
    for (size_t r = 0; r < x.size(); ++r)
      svg << px(x[r]) << ',' << py(table.columns[c][r]) << ' ';
    svg << "\"/>\n";
    svg << "<text x=\"" << width - margin + 4 << "\" y=\"" << margin + 16 * c << "\" fill=\""
        << palette[(c - 1) % 7] << "\" font-size=\"11\">" << table.header[c] << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

namespace {

std::string complex_str(Complex z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::ostringstream os;
  os << format_double(re);
  if (im >= 0.0) os << "+" << format_double(im) << "i";
  else os << format_double(im) << "i";
  return os.str();
}

}  // namespace

std::string classification_report(const CurveClassification& cls) {
  std::ostringstream os;
  os << "endpoint_a = " << format_double(cls.endpoint_a) << "\n";
  os << "endpoint_b = " << format_double(cls.endpoint_b) << "\n";
  os << "encircles_interval = " << (cls.encircles_interval ? "true" : "false") << "\n";
  os << "orientation = "
     << (cls.orientation == Orientation::Anticlockwise ? "anticlockwise" : "clockwise") << "\n";
  os << "omega_domain_closed = " << (cls.omega_domain_closed ? "true" : "false") << "\n";
  os << "domain_winding = " << cls.domain_winding << "\n";
  os << "all_time_independent = " << (cls.all_time_independent ? "true" : "false") << "\n";

  os << "h_poles_global =";
  for (const auto& [root, mult] : cls.h_poles_global)
    os << " (" << complex_str(root) << ", " << mult << ")";
  os << "\n";
  os << "h_zeros_global =";
  for (const auto& [root, mult] : cls.h_zeros_global)
    os << " (" << complex_str(root) << ", " << mult << ")";
  os << "\n";

  os << "h_poles_in_omega =";
  for (const auto& p : cls.h_poles) {
    os << " (" << complex_str(p.location) << ", n=" << p.multiplicity;
    if (p.residue) os << ", b=" << complex_str(*p.residue);
    os << ", wind=" << p.winding << ")";
  }
  os << "\n";

  // Per-probe preimage counts, summarized as runs of equal m.
  os << "m_profile =";
  if (cls.m_profile.empty()) {
    os << " unavailable";
  } else {
    size_t start = 0;
    auto count = [&](size_t i) {
      int m = 0;
      for (const auto& q : cls.m_profile[i]) m += q.multiplicity;
      return m;
    };
    for (size_t i = 1; i <= cls.m_profile.size(); ++i) {
      if (i == cls.m_profile.size() || count(i) != count(start)) {
        os << " m=" << count(start) << " on [" << format_double(cls.probe_lambdas[start]) << ", "
           << format_double(cls.probe_lambdas[i - 1]) << "]";
        start = i;
      }
    }
  }
  os << "\n";
  return os.str();
}

std::string recovery_report(const RecoveryResult& result) {
  std::ostringstream os;
  os << "f1 = " << format_double(result.f1) << "\n";
  os << "f1_interval = [" << format_double(result.interval_lo) << ", "
     << format_double(result.interval_hi) << "]\n";
  os << "diagnostics = " << result.diagnostics << "\n";
  return os.str();
}

std::string frequency_recovery_report(const FrequencyRecovery& result) {
  std::ostringstream os;
  os << "xi = " << complex_str(result.xi) << "\n";
  os << "stieltjes_integral = " << complex_str(result.stieltjes()) << "\n";
  os << "branch = " << (result.real_branch ? "single-time (real kappa)" : "two-time") << "\n";
  os << "diagnostics = " << result.diagnostics << "\n";
  return os.str();
}

Table envelope_table(const BoundEnvelope& env) {
  return Table{{"t", "lower", "upper", "argmin_lambda", "argmax_lambda"},
               {env.times, env.lower, env.upper, env.argmin_lambda, env.argmax_lambda}};
}

Table series_table(const TimeSeries& series, const std::string& value_name) {
  return Table{{"t", value_name}, {series.times, series.values}};
}

}  // namespace composig
