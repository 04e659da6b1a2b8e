#include "pdfl/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "pdfl/errors.hpp"
#include "pdfl/format.hpp"

namespace pdfl {

namespace {

nlohmann::json encode_value(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double decode_value(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw ValidationError("bad filtration value '" + s + "' in report JSON");
  }
  return j.get<double>();
}

}  // namespace

std::string emit_csv(const Report& report) {
  std::string out = "dim,a,b,betti,lambda_min_nonzero,n_eigenvalues\n";
  for (const SpectraRecord& r : report.records) {
    out += std::to_string(r.k);
    out += ',';
    out += format_double(r.a);
    out += ',';
    out += format_double(r.b);
    out += ',';
    out += std::to_string(r.betti);
    out += ',';
    if (r.lambda_min_nonzero) out += format_double(*r.lambda_min_nonzero);
    out += ',';
    out += std::to_string(r.eigenvalues.size());
    out += '\n';
  }
  return out;
}

std::string emit_json(const Report& report) {
  nlohmann::json doc;
  doc["records"] = nlohmann::json::array();
  for (const SpectraRecord& r : report.records) {
    nlohmann::json rec;
    rec["dim"] = r.k;
    rec["a"] = encode_value(r.a);
    rec["b"] = encode_value(r.b);
    rec["betti"] = r.betti;
    rec["lambda_min_nonzero"] =
        r.lambda_min_nonzero ? nlohmann::json(*r.lambda_min_nonzero)
                             : nlohmann::json();
    rec["eigenvalues"] = std::vector<double>(
        r.eigenvalues.data(), r.eigenvalues.data() + r.eigenvalues.size());
    doc["records"].push_back(std::move(rec));
  }
  doc["provenance"] = {
      {"version", report.provenance.version},
      {"config", report.provenance.config},
      {"timings_ms", report.provenance.timings_ms},
  };
  return doc.dump(2) + "\n";
}

Report parse_report_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("report JSON: ") + e.what());
  }
  Report report;
  try {
    for (const auto& rec : doc.at("records")) {
      SpectraRecord r;
      r.k = rec.at("dim").get<int>();
      r.a = decode_value(rec.at("a"));
      r.b = decode_value(rec.at("b"));
      r.betti = rec.at("betti").get<int>();
      if (!rec.at("lambda_min_nonzero").is_null())
        r.lambda_min_nonzero = rec.at("lambda_min_nonzero").get<double>();
      const auto eigs = rec.at("eigenvalues").get<std::vector<double>>();
      r.eigenvalues = Eigen::Map<const Eigen::VectorXd>(
          eigs.data(), static_cast<Eigen::Index>(eigs.size()));
      report.records.push_back(std::move(r));
    }
    const auto& prov = doc.at("provenance");
    report.provenance.version = prov.at("version").get<std::string>();
    report.provenance.config = prov.at("config");
    report.provenance.timings_ms =
        prov.at("timings_ms").get<std::map<std::string, double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("report JSON: ") + e.what());
  }
  return report;
}

namespace {

struct Scale {
  double lo = 0, hi = 1, px0 = 0, px1 = 1;
  double operator()(double v) const {
    const double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    return px0 + t * (px1 - px0);
  }
};

void append_series(std::string& svg, const std::vector<double>& xs,
                   const std::vector<double>& ys, const Scale& sx,
                   const Scale& sy, const char* cls, const char* color,
                   const char* attr) {
  if (xs.empty()) return;
  svg += "    <polyline fill=\"none\" stroke=\"";
  svg += color;
  svg += "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) svg += ' ';
    svg += format_double(sx(xs[i])) + "," + format_double(sy(ys[i]));
  }
  svg += "\"/>\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg += "    <circle class=\"";
    svg += cls;
    svg += "\" cx=\"" + format_double(sx(xs[i])) + "\" cy=\"" +
           format_double(sy(ys[i])) + "\" r=\"3\" fill=\"";
    svg += color;
    svg += "\" data-a=\"" + format_double(xs[i]) + "\" data-";
    svg += attr;
    svg += "=\"" + format_double(ys[i]) + "\"/>\n";
  }
}

}  // namespace

std::string emit_plot(const Report& report) {
  std::set<int> dims;
  for (const auto& r : report.records) dims.insert(r.k);

  const double panel_w = 640, panel_h = 150, margin = 45;
  const double width = panel_w + 2 * margin;
  const double height =
      dims.empty() ? 120 : margin + dims.size() * (panel_h + margin);

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      format_double(width) + "\" height=\"" + format_double(height) +
      "\" font-family=\"sans-serif\" font-size=\"11\">\n";

  double top = margin;
  for (int dim : dims) {
    std::vector<double> xs_b, ys_b, xs_l, ys_l;
    for (const auto& r : report.records) {
      if (r.k != dim || std::isinf(r.a)) continue;
      xs_b.push_back(r.a);
      ys_b.push_back(r.betti);
      if (r.lambda_min_nonzero) {
        xs_l.push_back(r.a);
        ys_l.push_back(*r.lambda_min_nonzero);
      }
    }
    double xlo = 0, xhi = 1, yhi = 1;
    if (!xs_b.empty()) {
      xlo = *std::min_element(xs_b.begin(), xs_b.end());
      xhi = *std::max_element(xs_b.begin(), xs_b.end());
      for (double y : ys_b) yhi = std::max(yhi, y);
      for (double y : ys_l) yhi = std::max(yhi, y);
    }
    if (xhi == xlo) xhi = xlo + 1;
    const Scale sx{xlo, xhi, margin, margin + panel_w};
    const Scale sy{0, yhi, top + panel_h, top};  // y grows upward

    svg += "  <g class=\"panel\" data-dim=\"" + std::to_string(dim) + "\">\n";
    svg += "    <rect x=\"" + format_double(margin) + "\" y=\"" +
           format_double(top) + "\" width=\"" + format_double(panel_w) +
           "\" height=\"" + format_double(panel_h) +
           "\" fill=\"none\" stroke=\"#999\"/>\n";
    svg += "    <text x=\"" + format_double(margin) + "\" y=\"" +
           format_double(top - 6) + "\">k = " + std::to_string(dim) +
           " &#8212; betti (teal), smallest positive eigenvalue (orange)"
           "</text>\n";
    append_series(svg, xs_b, ys_b, sx, sy, "betti", "#0a7", "betti");
    append_series(svg, xs_l, ys_l, sx, sy, "lambda", "#e80", "lambda");
    svg += "  </g>\n";
    top += panel_h + margin;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace pdfl
