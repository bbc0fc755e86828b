#include "rglab/cli/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>

#include "rglab/core/format.hpp"
#include "rglab/harness/train.hpp"

namespace rglab::cli {

namespace fs = std::filesystem;

void write_record(const std::string& records_dir, const harness::RunRecord& record) {
  fs::create_directories(records_dir);
  const std::string stem =
      record.run_name + "_seed" + std::to_string(record.seed);
  {
    std::ofstream out(fs::path(records_dir) / (stem + ".summary.json"));
    out << record.to_json().dump(2) << "\n";
  }
  {
    std::ofstream out(fs::path(records_dir) / (stem + ".events.jsonl"));
    record.write_events(out);
  }
}

std::vector<harness::RunRecord> load_records(const std::string& records_dir) {
  std::vector<fs::path> files;
  if (fs::exists(records_dir)) {
    for (const auto& entry : fs::directory_iterator(records_dir)) {
      const std::string name = entry.path().filename().string();
      if (name.size() > 13 && name.substr(name.size() - 13) == ".summary.json") {
        files.push_back(entry.path());
      }
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<harness::RunRecord> records;
  for (const auto& file : files) {
    std::ifstream in(file);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) continue;
    records.push_back(harness::RunRecord::from_json(doc));
  }
  return records;
}

std::vector<double> rolling_mean(const std::vector<double>& series, int window) {
  std::vector<double> out(series.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    sum += series[i];
    if (i >= static_cast<std::size_t>(window)) sum -= series[i - static_cast<std::size_t>(window)];
    const auto denom = std::min<std::size_t>(i + 1, static_cast<std::size_t>(window));
    out[i] = sum / static_cast<double>(denom);
  }
  return out;
}

namespace {

// Minimal line-plot SVG. Everything is rendered with fixed precision so
// identical inputs give identical bytes.
class SvgPlot {
 public:
  SvgPlot(int width, int height, std::string title)
      : width_(width), height_(height), title_(std::move(title)) {}

  void add_series(const std::vector<double>& ys, const std::string& color) {
    for (double y : ys) {
      y_min_ = std::min(y_min_, y);
      y_max_ = std::max(y_max_, y);
    }
    x_max_ = std::max(x_max_, ys.size());
    series_.push_back({ys, color});
  }

  void add_legend(const std::string& label, const std::string& color) {
    legend_.push_back({label, color});
  }

  std::string render() const {
    const double pad = 46.0;
    const double plot_w = width_ - 2 * pad;
    const double plot_h = height_ - 2 * pad;
    const double lo = y_min_ < y_max_ ? y_min_ : y_min_ - 1.0;
    const double hi = y_min_ < y_max_ ? y_max_ : y_max_ + 1.0;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width_) + "\" height=\"" + std::to_string(height_) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_fixed(width_ / 2.0, 1) +
           "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           title_ + "</text>\n";
    // axes
    svg += "<line x1=\"" + format_fixed(pad, 1) + "\" y1=\"" + format_fixed(pad, 1) +
           "\" x2=\"" + format_fixed(pad, 1) + "\" y2=\"" + format_fixed(pad + plot_h, 1) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_fixed(pad, 1) + "\" y1=\"" + format_fixed(pad + plot_h, 1) +
           "\" x2=\"" + format_fixed(pad + plot_w, 1) + "\" y2=\"" +
           format_fixed(pad + plot_h, 1) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"8\" y=\"" + format_fixed(pad + 4, 1) +
           "\" font-family=\"sans-serif\" font-size=\"10\">" + format_fixed(hi, 2) + "</text>\n";
    svg += "<text x=\"8\" y=\"" + format_fixed(pad + plot_h, 1) +
           "\" font-family=\"sans-serif\" font-size=\"10\">" + format_fixed(lo, 2) + "</text>\n";
    svg += "<text x=\"" + format_fixed(pad + plot_w, 1) + "\" y=\"" +
           format_fixed(pad + plot_h + 16, 1) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">episode " +
           std::to_string(x_max_ == 0 ? 0 : x_max_ - 1) + "</text>\n";

    for (const auto& s : series_) {
      if (s.ys.empty()) continue;
      std::string points;
      for (std::size_t i = 0; i < s.ys.size(); ++i) {
        const double x =
            pad + (x_max_ <= 1 ? 0.0
                               : plot_w * static_cast<double>(i) / static_cast<double>(x_max_ - 1));
        const double t = (s.ys[i] - lo) / (hi - lo);
        const double y = pad + plot_h * (1.0 - t);
        points += format_fixed(x, 2) + "," + format_fixed(y, 2) + " ";
      }
      svg += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"1.2\" points=\"" + points + "\"/>\n";
    }

    double ly = pad + 14.0;
    for (const auto& [label, color] : legend_) {
      svg += "<rect x=\"" + format_fixed(pad + 8, 1) + "\" y=\"" + format_fixed(ly - 9, 1) +
             "\" width=\"12\" height=\"4\" fill=\"" + color + "\"/>\n";
      svg += "<text x=\"" + format_fixed(pad + 26, 1) + "\" y=\"" + format_fixed(ly - 3, 1) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" + label + "</text>\n";
      ly += 14.0;
    }
    svg += "</svg>\n";
    return svg;
  }

 private:
  struct Series {
    std::vector<double> ys;
    std::string color;
  };
  int width_, height_;
  std::string title_;
  std::vector<Series> series_;
  std::vector<std::pair<std::string, std::string>> legend_;
  double y_min_ = 0.0, y_max_ = 0.0;
  std::size_t x_max_ = 0;
};

std::string csv_double(double v) { return format_fixed(v, 6); }

}  // namespace

ReportResult write_reports(const std::string& records_dir, const std::string& reports_dir,
                           const std::vector<ExperimentManifest::Pairing>& pairings) {
  ReportResult result;
  fs::create_directories(reports_dir);

  std::map<std::string, std::vector<harness::RunRecord>> by_run;
  for (auto& record : load_records(records_dir)) {
    by_run[record.run_name].push_back(std::move(record));
  }
  for (auto& [name, records] : by_run) {
    std::sort(records.begin(), records.end(),
              [](const auto& a, const auto& b) { return a.seed < b.seed; });
  }

  // learning-curve CSVs, one per run and seed
  for (const auto& [name, records] : by_run) {
    for (const auto& record : records) {
      const fs::path path =
          fs::path(reports_dir) / ("curve_" + name + "_seed" + std::to_string(record.seed) + ".csv");
      std::ofstream out(path);
      out << "episode,steps,intrinsic_return,rolling_mean_100\n";
      const auto rolling = rolling_mean(record.episode_returns, 100);
      for (std::size_t i = 0; i < record.episode_returns.size(); ++i) {
        out << i << "," << record.episode_steps[i] << ","
            << csv_double(record.episode_returns[i]) << "," << csv_double(rolling[i]) << "\n";
      }
      result.files_written.push_back(path.string());
    }
  }

  for (const auto& pairing : pairings) {
    auto guided_it = by_run.find(pairing.guided);
    auto baseline_it = by_run.find(pairing.baseline);
    if (guided_it == by_run.end() || baseline_it == by_run.end()) {
      result.incomplete_pairings.push_back(pairing.guided + " vs " + pairing.baseline);
      continue;
    }
    const auto& guided = guided_it->second;
    const auto& baseline = baseline_it->second;

    const std::string pair_name = pairing.guided + "_vs_" + pairing.baseline;
    {
      const fs::path path = fs::path(reports_dir) / ("boosted_" + pair_name + ".csv");
      std::ofstream out(path);
      out << "checkpoint_step,baseline_mean,guided_mean,boosted_reward";
      for (const auto& record : guided) out << ",delta_seed" << record.seed;
      out << "\n";
      try {
        for (const auto& row : harness::boosted_reward(guided, baseline)) {
          out << row.step << "," << csv_double(row.baseline_mean) << ","
              << csv_double(row.guided_mean) << "," << csv_double(row.boost);
          for (double d : row.per_seed_delta) out << "," << csv_double(d);
          out << "\n";
        }
      } catch (const std::invalid_argument& e) {
        out << "error," << e.what() << "\n";
        result.incomplete_pairings.push_back(pair_name + " (" + e.what() + ")");
      }
      result.files_written.push_back(path.string());
    }
    {
      SvgPlot plot(760, 420, "rolling intrinsic return: " + pair_name);
      for (const auto& record : baseline) {
        plot.add_series(rolling_mean(record.episode_returns, 100), "#5b8dd9");
      }
      for (const auto& record : guided) {
        plot.add_series(rolling_mean(record.episode_returns, 100), "#e0762e");
      }
      plot.add_legend("baseline (" + pairing.baseline + ")", "#5b8dd9");
      plot.add_legend("guided (" + pairing.guided + ")", "#e0762e");
      const fs::path path = fs::path(reports_dir) / ("curves_" + pair_name + ".svg");
      std::ofstream out(path);
      out << plot.render();
      result.files_written.push_back(path.string());
    }
  }
  return result;
}

}  // namespace rglab::cli
