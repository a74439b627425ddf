#include "actlr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "actlr/parallel.hpp"

namespace actlr {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  if (!s.empty() && s.back() == sep) parts.push_back("");
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw std::invalid_argument("config: bad number for '" + key + "': " +
                                value);
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw std::invalid_argument("config: bad integer for '" + key + "': " +
                                value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return static_cast<std::uint64_t>(v);
  } catch (...) {
    throw std::invalid_argument("config: bad seed for '" + key + "': " + value);
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  bool have_schedule = false;
  ScheduleParams sched;

  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " has empty key or value");
    }

    if (key == "dataset") {
      cfg.dataset_kind = value;
    } else if (key == "n") {
      cfg.synth.n = parse_long(key, value);
    } else if (key == "d") {
      cfg.synth.d = static_cast<int>(parse_long(key, value));
    } else if (key == "dataset_seed") {
      cfg.synth.seed = parse_u64(key, value);
    } else if (key == "csv_path") {
      cfg.csv_path = value;
    } else if (key == "csv_test_path") {
      cfg.csv_test_path = value;
    } else if (key == "test_n") {
      cfg.test_n = parse_long(key, value);
    } else if (key == "strategies") {
      for (const std::string& name : split(value, ',')) {
        auto s = strategy_from_string(name);
        if (!s) {
          throw std::invalid_argument("config: unknown strategy '" + name +
                                      "'");
        }
        cfg.strategies.push_back(*s);
      }
    } else if (key == "budgets") {
      for (const std::string& b : split(value, ',')) {
        cfg.budgets.push_back(parse_long(key, b));
      }
    } else if (key == "trials") {
      cfg.trials = static_cast<int>(parse_long(key, value));
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(key, value);
    } else if (key == "delta") {
      cfg.delta = parse_double(key, value);
    } else if (key == "r1_bound") {
      cfg.r1_bound = parse_double(key, value);
    } else if (key == "master_seed") {
      cfg.master_seed = parse_u64(key, value);
    } else if (key == "threads") {
      cfg.threads = static_cast<int>(parse_long(key, value));
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else if (key == "target_train_acc") {
      cfg.target_train_acc = parse_double(key, value);
    } else if (key == "r_samples") {
      cfg.curve.learner.r_samples = static_cast<int>(parse_long(key, value));
    } else if (key == "step_size") {
      cfg.curve.learner.sampler.step_size = parse_double(key, value);
    } else if (key == "burn_in") {
      cfg.curve.learner.sampler.burn_in = static_cast<int>(parse_long(key, value));
    } else if (key == "thinning") {
      cfg.curve.learner.sampler.thinning = static_cast<int>(parse_long(key, value));
    } else if (key == "chain_count") {
      cfg.curve.learner.sampler.chain_count =
          static_cast<int>(parse_long(key, value));
    } else if (key == "warm_burn_in") {
      cfg.curve.learner.warm_burn_in = static_cast<int>(parse_long(key, value));
    } else if (key == "log_ratio_cap") {
      cfg.curve.learner.cap.cap = parse_double(key, value);
    } else if (key == "paired_max_rejections") {
      cfg.curve.learner.paired_max_rejections =
          static_cast<int>(parse_long(key, value));
    } else if (key == "paired_rejection_pool") {
      cfg.curve.learner.paired_rejection_pool = parse_long(key, value);
    } else if (key == "gamma") {
      sched.gamma = parse_double(key, value);
      have_schedule = true;
    } else if (key == "phases") {
      sched.phases = static_cast<int>(parse_long(key, value));
      have_schedule = true;
    } else if (key == "iters_per_phase") {
      sched.iters_per_phase = static_cast<int>(parse_long(key, value));
      have_schedule = true;
    } else if (key == "m_surrogate") {
      sched.m_surrogate = parse_long(key, value);
      have_schedule = true;
    } else if (key == "budget_cap") {
      sched.budget_cap = parse_long(key, value);
      have_schedule = true;
    } else if (key == "reg") {
      cfg.curve.fit.reg = parse_double(key, value);
    } else if (key == "tol") {
      cfg.curve.fit.tol = parse_double(key, value);
    } else if (key == "max_iters") {
      cfg.curve.fit.max_iters = static_cast<int>(parse_long(key, value));
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  if (have_schedule) cfg.curve.schedule = sched;

  if (cfg.dataset_kind != "synthetic" && cfg.dataset_kind != "csv") {
    throw std::invalid_argument("config: dataset must be synthetic or csv");
  }
  if (cfg.dataset_kind == "synthetic" && (cfg.synth.n < 1 || cfg.synth.d < 1)) {
    throw std::invalid_argument("config: synthetic dataset needs n >= 1, d >= 1");
  }
  if (cfg.dataset_kind == "csv" && cfg.csv_path.empty()) {
    throw std::invalid_argument("config: csv dataset needs csv_path");
  }
  if (cfg.strategies.empty()) {
    throw std::invalid_argument("config: strategies must be non-empty");
  }
  if (cfg.budgets.empty()) {
    throw std::invalid_argument("config: budgets must be non-empty");
  }
  for (std::size_t i = 0; i < cfg.budgets.size(); ++i) {
    if (cfg.budgets[i] < 1 ||
        (i + 1 < cfg.budgets.size() && cfg.budgets[i] >= cfg.budgets[i + 1])) {
      throw std::invalid_argument(
          "config: budgets must be positive and strictly increasing");
    }
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("config: trials must be >= 1");
  }
  if (!(cfg.epsilon > 0.0)) {
    throw std::invalid_argument("config: epsilon must be positive");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) {
    throw std::invalid_argument("config: delta must lie in (0,1)");
  }
  if (cfg.threads < 0 || cfg.test_n < 0) {
    throw std::invalid_argument("config: threads and test_n must be >= 0");
  }
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

// Points uniform in [-1,1]^d plus a trailing constant-1 coordinate.
Eigen::MatrixXd sample_hypercube(long n, int d, Rng& rng) {
  Eigen::MatrixXd pts(n, d + 1);
  for (long i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      pts(i, j) = rng.uniform(-1.0, 1.0);
    }
    pts(i, d) = 1.0;
  }
  return pts;
}

}  // namespace

std::pair<DatasetPtr, LabelOracle> generate_synthetic(long n, int d,
                                                      std::uint64_t seed) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("generate_synthetic: need n >= 1 and d >= 1");
  }
  Rng rng(seed);
  Eigen::MatrixXd pts = sample_hypercube(n, d, rng);
  Eigen::VectorXd w_star(d + 1);
  for (int j = 0; j <= d; ++j) w_star(j) = rng.uniform(-1.0, 1.0);

  double r2 = std::sqrt(static_cast<double>(d + 1));
  Eigen::VectorXd weights =
      Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  auto data = std::make_shared<Dataset>(std::move(pts), std::move(weights), r2);
  Hypothesis truth{std::move(w_star), LinkFunction::sigmoid(), 0.0};
  LabelOracle oracle = LabelOracle::bernoulli(
      data, std::move(truth), Rng::mix(seed, Rng::hash_name("oracle")));
  return {data, std::move(oracle)};
}

LoadedCsv load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("load_csv: cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("load_csv: empty file " + path);
  }
  std::vector<std::string> header = split(trim(line), ',');
  int d = 0;
  while (d < static_cast<int>(header.size()) &&
         header[static_cast<std::size_t>(d)] == "f" + std::to_string(d)) {
    ++d;
  }
  if (d == 0) {
    throw std::invalid_argument("load_csv: header must start with f0");
  }
  int label_col = -1;
  int weight_col = -1;
  for (int c = d; c < static_cast<int>(header.size()); ++c) {
    const std::string& name = header[static_cast<std::size_t>(c)];
    if (name == "label" && label_col < 0) {
      label_col = c;
    } else if (name == "weight" && weight_col < 0) {
      weight_col = c;
    } else {
      throw std::invalid_argument("load_csv: unexpected column '" + name + "'");
    }
  }

  std::vector<std::vector<double>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> cells = split(t, ',');
    if (cells.size() != header.size()) {
      throw std::invalid_argument("load_csv: line " + std::to_string(line_no) +
                                  ": expected " +
                                  std::to_string(header.size()) + " cells");
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& cell : cells) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stod(cell, &pos));
        if (pos != cell.size()) throw std::invalid_argument("trailing");
      } catch (...) {
        throw std::invalid_argument("load_csv: line " +
                                    std::to_string(line_no) +
                                    ": bad number '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::invalid_argument("load_csv: no data rows in " + path);
  }

  Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd pts(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      pts(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }

  LoadedCsv out;
  if (label_col >= 0) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      double v = rows[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(label_col)];
      if (v != 0.0 && v != 1.0) {
        throw std::invalid_argument("load_csv: non-binary label in row " +
                                    std::to_string(i + 2));
      }
      labels[static_cast<std::size_t>(i)] = static_cast<int>(v);
    }
    out.labels = std::move(labels);
  }
  if (weight_col >= 0) {
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      w(i) = rows[static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(weight_col)];
    }
    double r2 = pts.rowwise().norm().maxCoeff();
    out.data = std::make_shared<Dataset>(std::move(pts), std::move(w), r2);
    out.had_weights = true;
  } else {
    out.data = std::make_shared<Dataset>(Dataset::with_uniform_weights(std::move(pts)));
  }
  return out;
}

void write_dataset_csv(const std::string& path, const Dataset& data,
                       const std::vector<int>* labels) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("write_dataset_csv: cannot open " + path);
  }
  for (int j = 0; j < data.dim(); ++j) {
    if (j > 0) out << ',';
    out << 'f' << j;
  }
  if (labels) out << ",label";
  out << '\n';
  char buf[40];
  for (int i = 0; i < data.size(); ++i) {
    for (int j = 0; j < data.dim(); ++j) {
      if (j > 0) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", data.points()(i, j));
      out << buf;
    }
    if (labels) out << ',' << (*labels)[static_cast<std::size_t>(i)];
    out << '\n';
  }
}

namespace {

struct CurveRecord {
  std::string strategy;
  int trial = 0;
  long budget = 0;
  std::optional<double> train_acc;
  std::optional<double> test_acc;
  std::optional<double> l2;
};

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return 0.5 * (v[mid - 1] + v[mid]);
}

std::optional<double> record_metric(const CurveRecord& r,
                                    const std::string& metric) {
  if (metric == "train_acc") return r.train_acc;
  if (metric == "test_acc") return r.test_acc;
  if (metric == "l2_to_truth") return r.l2;
  throw std::invalid_argument("summarize: unknown metric '" + metric + "'");
}

// Median labels per strategy until `metric` crosses `value` (upward for
// accuracies, downward for l2_to_truth).
std::string summary_table(const std::vector<CurveRecord>& records,
                          const std::vector<std::string>& strategy_order,
                          const std::string& metric, double value) {
  bool downward = metric == "l2_to_truth";
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::map<std::string, std::map<int, double>> reach;  // strategy -> trial -> budget
  std::map<std::string, std::map<int, bool>> seen;
  for (const CurveRecord& r : records) {
    seen[r.strategy][r.trial] = true;
    std::optional<double> m = record_metric(r, metric);
    if (!m) continue;
    bool hit = downward ? *m <= value : *m >= value;
    if (!hit) continue;
    auto& per_trial = reach[r.strategy];
    auto it = per_trial.find(r.trial);
    if (it == per_trial.end() || r.budget < it->second) {
      per_trial[r.trial] = static_cast<double>(r.budget);
    }
  }

  std::ostringstream out;
  out << "target " << metric << (downward ? " <= " : " >= ")
      << format_double(value) << "\n";
  out << "strategy    median_labels    reached\n";
  for (const std::string& name : strategy_order) {
    std::vector<double> budgets;
    int reached = 0;
    int total = 0;
    for (const auto& [trial, _] : seen[name]) {
      total++;
      auto it = reach[name].find(trial);
      if (it != reach[name].end()) {
        budgets.push_back(it->second);
        reached++;
      } else {
        budgets.push_back(kInf);
      }
    }
    double med = median(budgets);
    std::string med_str =
        std::isfinite(med) ? format_double(med) : std::string("-");
    out << name;
    for (std::size_t p = name.size(); p < 12; ++p) out << ' ';
    out << med_str;
    for (std::size_t p = med_str.size(); p < 17; ++p) out << ' ';
    out << reached << '/' << total << "\n";
  }
  return out.str();
}

std::vector<CurveRecord> read_curves_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("summarize: cannot open " + path);
  }
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "strategy,trial,budget,train_acc,test_acc,l2_to_truth") {
    throw std::invalid_argument("summarize: unexpected header in " + path);
  }
  std::vector<CurveRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<std::string> cells = split(t, ',');
    if (cells.size() != 6) {
      throw std::invalid_argument("summarize: line " +
                                  std::to_string(line_no) + " malformed");
    }
    CurveRecord r;
    r.strategy = cells[0];
    r.trial = static_cast<int>(parse_long("trial", cells[1]));
    r.budget = parse_long("budget", cells[2]);
    if (!cells[3].empty()) r.train_acc = parse_double("train_acc", cells[3]);
    if (!cells[4].empty()) r.test_acc = parse_double("test_acc", cells[4]);
    if (!cells[5].empty()) r.l2 = parse_double("l2_to_truth", cells[5]);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg) {
  DatasetPtr data;
  std::optional<std::vector<int>> train_labels;
  std::optional<Eigen::MatrixXd> test_points;
  std::vector<int> test_labels;
  std::optional<LabelOracle> proto_oracle;
  double default_r1 = 10.0;

  if (cfg.dataset_kind == "synthetic") {
    auto [d, oracle] = generate_synthetic(cfg.synth.n, cfg.synth.d,
                                          cfg.synth.seed);
    data = d;
    const Hypothesis& truth = oracle.truth();
    default_r1 = std::sqrt(static_cast<double>(cfg.synth.d + 1));

    if (cfg.test_n > 0) {
      Rng test_rng(Rng::mix(cfg.synth.seed, Rng::hash_name("test")));
      test_points = sample_hypercube(cfg.test_n, cfg.synth.d, test_rng);
      Rng test_lab_rng(Rng::mix(cfg.synth.seed, Rng::hash_name("test-labels")));
      test_labels.resize(static_cast<std::size_t>(cfg.test_n));
      for (long i = 0; i < cfg.test_n; ++i) {
        test_labels[static_cast<std::size_t>(i)] = test_lab_rng.bernoulli(
            predict(truth, test_points->row(i).transpose()));
      }
    }
    proto_oracle = std::move(oracle);
  } else {
    LoadedCsv loaded = load_csv(cfg.csv_path);
    if (!loaded.labels) {
      throw std::invalid_argument(
          "run_experiment: csv dataset needs a label column");
    }
    data = loaded.data;
    train_labels = *loaded.labels;
    proto_oracle = LabelOracle::replay(data, *loaded.labels);
    if (!cfg.csv_test_path.empty()) {
      LoadedCsv test = load_csv(cfg.csv_test_path);
      if (!test.labels) {
        throw std::invalid_argument(
            "run_experiment: test csv needs a label column");
      }
      if (test.data->dim() != data->dim()) {
        throw std::invalid_argument(
            "run_experiment: test csv dimension mismatch");
      }
      test_points = test.data->points();
      test_labels = *test.labels;
    }
  }

  ProblemInstance prob{data, std::move(*proto_oracle),
                       LinkFunction::sigmoid(),
                       cfg.r1_bound.value_or(default_r1), cfg.epsilon,
                       cfg.delta};
  EvalSplit split{train_labels, test_points, test_labels};

  int n_strategies = static_cast<int>(cfg.strategies.size());
  int jobs = n_strategies * cfg.trials;
  std::vector<LearningCurve> results(static_cast<std::size_t>(jobs));
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());

  parallel_for(jobs, threads, [&](int job) {
    int s = job / cfg.trials;
    int trial = job % cfg.trials;
    Strategy strat = cfg.strategies[static_cast<std::size_t>(s)];
    std::uint64_t seed = Rng::mix(
        Rng::mix(cfg.master_seed, Rng::hash_name(strategy_name(strat))),
        static_cast<std::uint64_t>(trial));
    Rng job_rng(seed);
    std::vector<LearningCurve> one = learning_curve(
        strat, prob, split, cfg.budgets, 1, cfg.curve, job_rng);
    results[static_cast<std::size_t>(job)] = std::move(one[0]);
  });

  std::filesystem::create_directories(cfg.out_dir);
  std::string curves_path = cfg.out_dir + "/curves.csv";
  std::string transcripts_path = cfg.out_dir + "/transcripts.csv";
  std::string summary_path = cfg.out_dir + "/summary.txt";

  std::vector<CurveRecord> records;
  {
    std::ofstream curves(curves_path);
    std::ofstream transcripts(transcripts_path);
    if (!curves || !transcripts) {
      throw std::invalid_argument("run_experiment: cannot write to " +
                                  cfg.out_dir);
    }
    curves << "strategy,trial,budget,train_acc,test_acc,l2_to_truth\n";
    transcripts << "strategy,trial,seq,point,label,phase,iteration\n";
    for (int job = 0; job < jobs; ++job) {
      int s = job / cfg.trials;
      int trial = job % cfg.trials;
      const LearningCurve& curve = results[static_cast<std::size_t>(job)];
      std::string name(strategy_name(cfg.strategies[static_cast<std::size_t>(s)]));
      if (curve.failed) {
        std::cerr << "trial failed: " << name << " #" << trial << ": "
                  << curve.error << "\n";
        continue;
      }
      for (const CurveRow& row : curve.rows) {
        if (!row.valid) continue;
        curves << name << ',' << trial << ',' << row.budget << ','
               << format_double(row.train_acc) << ',';
        if (row.has_test) curves << format_double(row.test_acc);
        curves << ',';
        if (row.has_l2) curves << format_double(row.l2);
        curves << '\n';
        CurveRecord rec;
        rec.strategy = name;
        rec.trial = trial;
        rec.budget = row.budget;
        rec.train_acc = row.train_acc;
        if (row.has_test) rec.test_acc = row.test_acc;
        if (row.has_l2) rec.l2 = row.l2;
        records.push_back(std::move(rec));
      }
      for (const QueryRecord& q : curve.run.log) {
        transcripts << name << ',' << trial << ',' << q.seq << ',' << q.point
                    << ',' << q.label << ',' << q.phase << ',' << q.iteration
                    << '\n';
      }
    }
  }

  // Summary target: configured, or the largest train accuracy every strategy
  // reaches (median across trials at the final budget).
  double target;
  if (cfg.target_train_acc) {
    target = *cfg.target_train_acc;
  } else {
    target = 1.0;
    for (const Strategy s : cfg.strategies) {
      std::string name(strategy_name(s));
      std::map<int, double> final_acc;
      std::map<int, long> final_budget;
      for (const CurveRecord& r : records) {
        if (r.strategy != name || !r.train_acc) continue;
        auto it = final_budget.find(r.trial);
        if (it == final_budget.end() || r.budget > it->second) {
          final_budget[r.trial] = r.budget;
          final_acc[r.trial] = *r.train_acc;
        }
      }
      std::vector<double> accs;
      for (const auto& [trial, acc] : final_acc) accs.push_back(acc);
      if (!accs.empty()) target = std::min(target, median(accs));
    }
  }

  std::vector<std::string> order;
  for (const Strategy s : cfg.strategies) order.emplace_back(strategy_name(s));
  std::string table = summary_table(records, order, "train_acc", target);

  std::ofstream summary(summary_path);
  summary << table;
  std::cout << table;
  return 0;
}

std::string summarize_curves(const std::string& curves_path,
                             const std::string& metric, double value) {
  std::vector<CurveRecord> records = read_curves_csv(curves_path);
  std::vector<std::string> order;
  for (const CurveRecord& r : records) {
    if (std::find(order.begin(), order.end(), r.strategy) == order.end()) {
      order.push_back(r.strategy);
    }
  }
  return summary_table(records, order, metric, value);
}

}  // namespace actlr
