#include "gcgt/plot.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace gcgt {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 60;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char* colour(Method m) {
  switch (m) {
    case Method::subgraph: return "#1f77b4";
    case Method::walk: return "#d62728";
    case Method::random: return "#2ca02c";
  }
  return "#000000";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render(const std::string& title, const std::vector<const ExperimentRecord*>& rows) {
  double tau_max = 1;
  for (const auto* r : rows) tau_max = std::max(tau_max, static_cast<double>(r->tau));
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double tau) { return kLeft + plot_w * tau / tau_max; };
  auto sy = [&](double p) { return kTop + plot_h * (1.0 - std::clamp(p, 0.0, 1.0)); };

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  os << "<g stroke=\"black\" fill=\"none\">\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0) << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << sy(0) << "\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0) << "\" x2=\"" << kLeft << "\" y2=\"" << sy(1) << "\"/>\n";
  os << "</g>\n";
  for (int i = 0; i <= 5; ++i) {
    const double p = i / 5.0;
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << sy(p) + 4 << "\" text-anchor=\"end\">" << p << "</text>\n";
    const double tau = tau_max * i / 5.0;
    os << "<text x=\"" << sx(tau) << "\" y=\"" << sy(0) + 18 << "\" text-anchor=\"middle\">"
       << static_cast<long long>(std::llround(tau)) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\">number of tests</text>\n";
  os << "<text transform=\"translate(16," << kTop + plot_h / 2
     << ") rotate(-90)\" text-anchor=\"middle\">success probability</text>\n";

  int legend_row = 0;
  for (Method m : {Method::subgraph, Method::walk, Method::random}) {
    std::vector<const ExperimentRecord*> curve;
    for (const auto* r : rows)
      if (r->method == m) curve.push_back(r);
    if (curve.empty()) continue;
    std::sort(curve.begin(), curve.end(), [](auto* a, auto* b) { return a->tau < b->tau; });
    os << "<g stroke=\"" << colour(m) << "\" fill=\"" << colour(m) << "\">\n";
    if (curve.size() > 1) {
      os << "<polyline fill=\"none\" points=\"";
      for (const auto* r : curve) os << sx(static_cast<double>(r->tau)) << ',' << sy(r->p_hat) << ' ';
      os << "\"/>\n";
    }
    for (const auto* r : curve) {
      const double x = sx(static_cast<double>(r->tau));
      const double band = 1.0 / std::sqrt(static_cast<double>(r->trials));
      os << "<line x1=\"" << x << "\" y1=\"" << sy(r->p_hat - band) << "\" x2=\"" << x << "\" y2=\""
         << sy(r->p_hat + band) << "\"/>\n";
      os << "<circle cx=\"" << x << "\" cy=\"" << sy(r->p_hat) << "\" r=\"3\"/>\n";
    }
    os << "</g>\n";
    const double ly = kTop + 10 + 20.0 * legend_row++;
    os << "<line x1=\"" << kLeft + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + plot_w + 40
       << "\" y2=\"" << ly << "\" stroke=\"" << colour(m) << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << kLeft + plot_w + 46 << "\" y=\"" << ly + 4 << "\">" << method_name(m) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::vector<PlotImage> render_plots(const std::vector<ExperimentRecord>& records) {
  std::map<std::tuple<std::string, std::string, unsigned>, std::vector<const ExperimentRecord*>> groups;
  for (const auto& r : records) groups[{r.family, r.params, r.d}].push_back(&r);
  std::vector<PlotImage> out;
  if (groups.empty()) {
    out.push_back({"empty", render("no records", {})});
    return out;
  }
  for (const auto& [key, rows] : groups) {
    const auto& [family, params, d] = key;
    const std::string title = family + " (" + params + "), d = " + std::to_string(d);
    out.push_back({family + "_" + params + "_d" + std::to_string(d), render(title, rows)});
  }
  return out;
}

}  // namespace gcgt
