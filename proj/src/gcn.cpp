#include "lexp/gcn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lexp/error.hpp"
#include "lexp/kernels.hpp"

namespace lexp {

const char* activation_name(Activation a) {
  return a == Activation::relu ? "relu" : "leaky_relu";
}

void Dataset::check() const {
  const std::size_t n = num_vertices();
  if (features.cols() == 0) throw InconsistentInputError("dataset: features have no columns");
  if (labels.size() != n || train.size() != n || val.size() != n || test.size() != n)
    throw InconsistentInputError("dataset: labels/masks do not match " + std::to_string(n) +
                                 " feature rows");
  for (std::size_t v = 0; v < n; ++v) {
    if (int(train[v]) + int(val[v]) + int(test[v]) > 1)
      throw InconsistentInputError("dataset: vertex " + std::to_string(v) + " is in two splits");
    if (train[v] && !labels[v])
      throw InconsistentInputError("dataset: training vertex " + std::to_string(v) +
                                   " has no label");
    if (labels[v] && *labels[v] >= num_classes)
      throw InconsistentInputError("dataset: label of vertex " + std::to_string(v) +
                                   " out of range");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "not a number: '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, "not a number: '" + token + "'");
  return value;
}

std::uint64_t parse_unsigned(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError(line, "integer out of range: '" + token + "'");
  }
}

}  // namespace

Matrix read_features_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(parse_double(trim(cell), line_no));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(line_no, "expected " + std::to_string(rows.front().size()) +
                                    " columns, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

std::vector<std::optional<std::size_t>> read_labels(std::istream& in, std::size_t num_vertices) {
  std::vector<std::optional<std::size_t>> labels(num_vertices);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream ss(text);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw ParseError(line_no, "expected '<vertex> <class>'");
    const auto v = parse_unsigned(a, line_no);
    const auto c = parse_unsigned(b, line_no);
    if (v >= num_vertices)
      throw ParseError(line_no, "vertex " + a + " outside " + std::to_string(num_vertices));
    if (labels[v]) throw ParseError(line_no, "vertex " + a + " labeled twice");
    labels[v] = static_cast<std::size_t>(c);
  }
  return labels;
}

Split read_split_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("split file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "split file must hold a JSON object");
  Split split;
  auto take = [&](const char* key, std::vector<Id>& out) {
    if (!doc.contains(key)) return;
    const auto& arr = doc.at(key);
    if (!arr.is_array()) throw ParseError(0, std::string("split key '") + key + "' is not an array");
    for (const auto& x : arr) {
      if (!x.is_number_unsigned()) throw ParseError(0, std::string("split key '") + key +
                                                            "' holds a non-id value");
      out.push_back(x.get<Id>());
    }
  };
  take("train", split.train);
  take("val", split.val);
  take("test", split.test);
  return split;
}

Dataset assemble_dataset(Matrix features, std::vector<std::optional<std::size_t>> labels,
                         const Split& split) {
  Dataset d;
  const std::size_t n = features.rows();
  d.features = std::move(features);
  d.labels = std::move(labels);
  d.train.assign(n, false);
  d.val.assign(n, false);
  d.test.assign(n, false);
  auto mark = [&](const std::vector<Id>& ids, std::vector<bool>& mask, const char* name) {
    for (Id v : ids) {
      if (v >= n)
        throw InconsistentInputError(std::string(name) + " split names vertex " +
                                     std::to_string(v) + " outside " + std::to_string(n));
      mask[v] = true;
    }
  };
  mark(split.train, d.train, "train");
  mark(split.val, d.val, "val");
  mark(split.test, d.test, "test");
  std::size_t classes = 0;
  for (const auto& l : d.labels)
    if (l) classes = std::max(classes, *l + 1);
  d.num_classes = classes;
  d.check();
  return d;
}

TrainConfig parse_train_config(std::string_view text) {
  TrainConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    const auto key = trim(std::string_view(line).substr(0, eq));
    const auto value = trim(std::string_view(line).substr(eq + 1));
    if (value.empty()) throw ParseError(line_no, "missing value for '" + key + "'");

    auto positive_count = [&] {
      const auto n = parse_unsigned(value, line_no);
      if (n == 0) throw ParseError(line_no, key + " must be at least 1");
      return static_cast<std::size_t>(n);
    };
    auto nonnegative = [&] {
      const double x = parse_double(value, line_no);
      if (!(x >= 0.0) || !std::isfinite(x)) throw ParseError(line_no, key + " must be >= 0");
      return x;
    };

    if (key == "w_v") {
      cfg.weights.w_v = nonnegative();
    } else if (key == "w_e") {
      cfg.weights.w_e = nonnegative();
    } else if (key == "layers") {
      cfg.layers = positive_count();
    } else if (key == "hidden") {
      cfg.hidden = positive_count();
    } else if (key == "lr") {
      cfg.lr = nonnegative();
    } else if (key == "epochs") {
      cfg.epochs = static_cast<std::size_t>(parse_unsigned(value, line_no));
    } else if (key == "weight_decay") {
      cfg.weight_decay = nonnegative();
    } else if (key == "delta_v") {
      cfg.sampling_config.delta_v = positive_count();
    } else if (key == "delta_e") {
      cfg.sampling_config.delta_e = positive_count();
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(value, line_no);
    } else if (key == "activation") {
      if (value == "relu")
        cfg.activation = Activation::relu;
      else if (value == "leaky_relu" || value == "leaky-relu")
        cfg.activation = Activation::leaky_relu;
      else
        throw ParseError(line_no, "activation must be relu or leaky_relu");
    } else if (key == "leaky_slope") {
      cfg.leaky_slope = nonnegative();
    } else if (key == "sampling") {
      if (value == "on" || value == "true" || value == "1")
        cfg.sampling = true;
      else if (value == "off" || value == "false" || value == "0")
        cfg.sampling = false;
      else
        throw ParseError(line_no, "sampling must be on or off");
    } else if (key == "patience") {
      cfg.patience = static_cast<std::size_t>(parse_unsigned(value, line_no));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  if (cfg.weights.w_v == 0.0 && cfg.weights.w_e == 0.0)
    throw ParseError(line_no, "w_v and w_e cannot both be zero");
  return cfg;
}

Model init_model(std::size_t in_dim, std::size_t hidden, std::size_t out_dim, std::size_t layers,
                 std::uint64_t seed) {
  if (layers == 0) throw ArgumentError("init_model: need at least one layer");
  if (in_dim == 0 || out_dim == 0 || hidden == 0)
    throw ArgumentError("init_model: layer widths must be positive");
  Rng rng(seed);
  Model m;
  for (std::size_t k = 0; k < layers; ++k) {
    const std::size_t rows = k == 0 ? in_dim : hidden;
    const std::size_t cols = k + 1 == layers ? out_dim : hidden;
    const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
    Matrix theta(rows, cols);
    for (double& x : theta.data()) x = rng.uniform(-bound, bound);
    m.thetas.push_back(std::move(theta));
  }
  return m;
}

LineGraphContext prepare_context(const Hypergraph& h, LineWeights weights) {
  auto le = line_expand(h, weights.w_v, weights.w_e);
  auto proj = projections(h);
  auto op = renormalized_operator(le);
  return {std::move(le), std::move(proj), std::move(op)};
}

Matrix feature_project(const ProjectionSet& p, const Matrix& x) {
  if (x.rows() != p.vertex.cols())
    throw ArgumentError("feature_project: " + std::to_string(x.rows()) + " feature rows for " +
                        std::to_string(p.vertex.cols()) + " vertices");
  return p.vertex.multiply(x);
}

Matrix conv_forward(const SparseMatrix& op, const Matrix& h, const Matrix& theta,
                    std::optional<Activation> act, double leaky_slope, std::size_t layer) {
  if (op.cols() != h.rows() || h.cols() != theta.rows())
    throw ArgumentError("conv_forward: shape mismatch at layer " + std::to_string(layer));
  Matrix out = matmul(op.multiply(h), theta);
  if (act) {
    const double slope = *act == Activation::relu ? 0.0 : leaky_slope;
    kernels::active().leaky_relu(slope, out.data(), out.data());
  }
  if (!all_finite(out)) throw NumericError("non-finite activations at layer " + std::to_string(layer));
  return out;
}

Matrix representation_project(const ProjectionSet& p, const Matrix& h) {
  if (h.rows() != p.vertex_back.cols())
    throw ArgumentError("representation_project: " + std::to_string(h.rows()) +
                        " rows for " + std::to_string(p.vertex_back.cols()) + " line nodes");
  return p.vertex_back.multiply(h);
}

namespace {

// Log-softmax of one row with max shift.
void log_softmax(std::span<const double> z, std::vector<double>& out) {
  const double shift = *std::max_element(z.begin(), z.end());
  double total = 0.0;
  for (double x : z) total += std::exp(x - shift);
  const double log_total = std::log(total) + shift;
  out.resize(z.size());
  for (std::size_t c = 0; c < z.size(); ++c) out[c] = z[c] - log_total;
}

std::size_t mask_count(const std::vector<bool>& mask) {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

}  // namespace

double cross_entropy(const Matrix& logits, const std::vector<std::optional<std::size_t>>& labels,
                     const std::vector<bool>& mask) {
  if (mask.size() != logits.rows() || labels.size() != logits.rows())
    throw ArgumentError("cross_entropy: mask/labels do not match logits");
  const std::size_t n = mask_count(mask);
  if (n == 0) throw ArgumentError("cross_entropy: empty mask");
  std::vector<double> lp;
  double total = 0.0;
  for (std::size_t v = 0; v < logits.rows(); ++v) {
    if (!mask[v]) continue;
    if (!labels[v]) throw ArgumentError("cross_entropy: masked vertex " + std::to_string(v) +
                                        " has no label");
    if (*labels[v] >= logits.cols())
      throw ArgumentError("cross_entropy: label of vertex " + std::to_string(v) + " out of range");
    log_softmax(logits.row(v), lp);
    total -= lp[*labels[v]];
  }
  return total / static_cast<double>(n);
}

double accuracy(const Matrix& logits, const std::vector<std::optional<std::size_t>>& labels,
                const std::vector<bool>& mask) {
  std::size_t seen = 0, hit = 0;
  for (std::size_t v = 0; v < logits.rows(); ++v) {
    if (!mask[v] || !labels[v]) continue;
    ++seen;
    const auto row = logits.row(v);
    const auto best = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
    if (best == *labels[v]) ++hit;
  }
  return seen == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(seen);
}

ForwardPass forward(const LineGraphContext& ctx, const SparseMatrix& op, const Model& model,
                    const Matrix& x) {
  ForwardPass pass;
  Matrix h = feature_project(ctx.projections, x);
  const std::size_t layers = model.num_layers();
  for (std::size_t k = 0; k < layers; ++k) {
    const Matrix& theta = model.thetas[k];
    if (h.cols() != theta.rows())
      throw ArgumentError("forward: layer " + std::to_string(k) + " expects width " +
                          std::to_string(theta.rows()) + ", got " + std::to_string(h.cols()));
    Matrix agg = op.multiply(h);
    Matrix z = matmul(agg, theta);
    if (!all_finite(z)) throw NumericError("non-finite activations at layer " + std::to_string(k));
    pass.inputs.push_back(std::move(h));
    pass.aggregated.push_back(std::move(agg));
    if (k + 1 < layers) {
      h = Matrix(z.rows(), z.cols());
      const double slope = model.activation == Activation::relu ? 0.0 : model.leaky_slope;
      kernels::active().leaky_relu(slope, z.data(), h.data());
    }
    pass.pre_activation.push_back(std::move(z));
  }
  pass.line_logits = layers ? pass.pre_activation.back() : h;
  pass.logits = representation_project(ctx.projections, pass.line_logits);
  return pass;
}

double objective(const ForwardPass& pass, const Model& model, const Dataset& data,
                 double weight_decay) {
  double loss = cross_entropy(pass.logits, data.labels, data.train);
  if (weight_decay > 0.0) {
    double sq = 0.0;
    for (const auto& t : model.thetas)
      for (double x : t.data()) sq += x * x;
    loss += 0.5 * weight_decay * sq;
  }
  return loss;
}

std::vector<Matrix> backward(const LineGraphContext& ctx, const SparseMatrix& op_t,
                             const Model& model, const ForwardPass& pass, const Dataset& data,
                             double weight_decay) {
  const Matrix& logits = pass.logits;
  const std::size_t n = mask_count(data.train);
  if (n == 0) throw ArgumentError("backward: empty training mask");

  // dL/dlogits = (softmax - onehot) / n on training rows.
  Matrix grad_logits(logits.rows(), logits.cols());
  std::vector<double> lp;
  for (std::size_t v = 0; v < logits.rows(); ++v) {
    if (!data.train[v]) continue;
    log_softmax(logits.row(v), lp);
    auto g = grad_logits.row(v);
    for (std::size_t c = 0; c < g.size(); ++c) g[c] = std::exp(lp[c]) / static_cast<double>(n);
    g[*data.labels[v]] -= 1.0 / static_cast<double>(n);
  }

  std::vector<Matrix> grads(model.num_layers());
  Matrix grad_z = ctx.projections.vertex_back.transpose().multiply(grad_logits);
  for (std::size_t k = model.num_layers(); k-- > 0;) {
    grads[k] = matmul_at_b(pass.aggregated[k], grad_z);
    if (weight_decay > 0.0) kernels::active().axpy(weight_decay, model.thetas[k].data(), grads[k].data());
    if (k == 0) break;
    Matrix grad_h = op_t.multiply(matmul_a_bt(grad_z, model.thetas[k]));
    const Matrix& z = pass.pre_activation[k - 1];
    const double slope = model.activation == Activation::relu ? 0.0 : model.leaky_slope;
    auto gd = grad_h.data();
    auto zd = z.data();
    for (std::size_t i = 0; i < gd.size(); ++i)
      if (!(zd[i] > 0.0)) gd[i] *= slope;
    grad_z = std::move(grad_h);
  }
  return grads;
}

namespace {

// Uniform sample of `take` distinct members (partial Fisher-Yates).
std::vector<Id> sample_without_replacement(std::vector<Id> pool, std::size_t take, Rng& rng) {
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void thin(std::vector<Id>& set, double& scale, std::size_t threshold, Rng& rng) {
  scale = 1.0;
  if (set.size() <= threshold) return;
  scale = static_cast<double>(set.size()) / static_cast<double>(threshold);
  set = sample_without_replacement(std::move(set), threshold, rng);
}

}  // namespace

SampledNeighborhood sample_neighbors(const LineExpansion& le, std::size_t node,
                                     const SamplingConfig& cfg, Rng& rng) {
  if (node >= le.num_nodes())
    throw ArgumentError("sample_neighbors: node " + std::to_string(node) + " out of range");
  if (cfg.delta_v == 0 || cfg.delta_e == 0)
    throw ArgumentError("sample_neighbors: thresholds must be at least 1");
  const auto [v, e] = le.nodes()[node];
  SampledNeighborhood s;
  for (Id j : le.vertex_group(v))
    if (j != node) s.vertex_side.push_back(j);
  for (Id j : le.hyperedge_group(e))
    if (j != node) s.hyperedge_side.push_back(j);
  thin(s.vertex_side, s.vertex_scale, cfg.delta_v, rng);
  thin(s.hyperedge_side, s.hyperedge_scale, cfg.delta_e, rng);
  return s;
}

SparseMatrix sampled_operator(const LineGraphContext& ctx, const SamplingConfig& cfg, Rng& rng) {
  const auto& le = ctx.expansion;
  const auto& deg = ctx.op.degree;
  const auto w = le.weights();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < le.num_nodes(); ++i) {
    const auto s = sample_neighbors(le, i, cfg, rng);
    const double di = deg[i];
    t.push_back({i, i, ctx.op.self_loop / di});
    for (Id j : s.vertex_side)
      t.push_back({i, j, w.w_e * s.vertex_scale / std::sqrt(di * deg[j])});
    for (Id j : s.hyperedge_side)
      t.push_back({i, j, w.w_v * s.hyperedge_scale / std::sqrt(di * deg[j])});
  }
  return SparseMatrix::from_triplets(le.num_nodes(), le.num_nodes(), std::move(t));
}

std::string report_json(const TrainReport& r, bool include_wall_time) {
  nlohmann::ordered_json j;
  const auto& c = r.config;
  j["seed"] = c.seed;
  j["config"] = {
      {"w_v", c.weights.w_v},
      {"w_e", c.weights.w_e},
      {"layers", c.layers},
      {"hidden", c.hidden},
      {"lr", c.lr},
      {"epochs", c.epochs},
      {"weight_decay", c.weight_decay},
      {"activation", activation_name(c.activation)},
      {"leaky_slope", c.leaky_slope},
      {"sampling", c.sampling ? "on" : "off"},
      {"delta_v", c.sampling_config.delta_v},
      {"delta_e", c.sampling_config.delta_e},
      {"patience", c.patience},
  };
  auto history = nlohmann::ordered_json::array();
  for (const auto& e : r.epochs)
    history.push_back({{"epoch", e.epoch}, {"loss", e.loss}, {"val_accuracy", e.val_accuracy}});
  j["history"] = std::move(history);
  j["best_epoch"] = r.best_epoch;
  j["best_val_accuracy"] = r.best_val_accuracy;
  j["train_accuracy"] = r.train_accuracy;
  j["test_accuracy"] = r.test_accuracy;
  j["test_count"] = r.test_count;
  j["diverged"] = r.diverged;
  if (!r.message.empty()) j["message"] = r.message;
  if (include_wall_time) j["wall_seconds"] = r.wall_seconds;
  return j.dump(2) + "\n";
}

TrainResult train(const Hypergraph& h, const Dataset& data, const TrainConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  data.check();
  if (data.num_vertices() != h.num_vertices())
    throw InconsistentInputError("train: " + std::to_string(data.num_vertices()) +
                                 " feature rows for " + std::to_string(h.num_vertices()) +
                                 " vertices");
  if (mask_count(data.train) == 0) throw InconsistentInputError("train: empty training split");
  if (const auto report = validate(h); !report.ok)
    throw InvalidInputError("train: " + report.summary());

  const auto ctx = prepare_context(h, cfg.weights);
  const SparseMatrix op_t = ctx.op.matrix.transpose();

  TrainResult result;
  result.model = init_model(data.features.cols(), cfg.hidden, data.num_classes, cfg.layers, cfg.seed);
  result.model.activation = cfg.activation;
  result.model.leaky_slope = cfg.leaky_slope;
  result.model.weights = cfg.weights;
  auto& report = result.report;
  report.config = cfg;

  // Sampling draws from its own stream so the initial parameters do not
  // depend on whether sampling is on.
  Rng sampler(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const bool has_val = mask_count(data.val) > 0;

  Model model = result.model;
  Model best = model;
  double best_val = -1.0;
  std::size_t since_best = 0;

  auto evaluate = [&](const Model& m) {
    return accuracy(forward(ctx, ctx.op.matrix, m, data.features).logits, data.labels, data.val);
  };

  try {
    best_val = evaluate(model);
    for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
      ForwardPass pass;
      std::vector<Matrix> grads;
      if (cfg.sampling) {
        const auto op = sampled_operator(ctx, cfg.sampling_config, sampler);
        pass = forward(ctx, op, model, data.features);
        grads = backward(ctx, op.transpose(), model, pass, data, cfg.weight_decay);
      } else {
        pass = forward(ctx, ctx.op.matrix, model, data.features);
        grads = backward(ctx, op_t, model, pass, data, cfg.weight_decay);
      }
      const double loss = objective(pass, model, data, cfg.weight_decay);
      if (!std::isfinite(loss)) throw NumericError("non-finite loss at epoch " + std::to_string(epoch));
      for (std::size_t k = 0; k < model.thetas.size(); ++k)
        kernels::active().axpy(-cfg.lr, grads[k].data(), model.thetas[k].data());

      const double val = evaluate(model);
      report.epochs.push_back({epoch, loss, val});
      if (!has_val || val > best_val) {
        best_val = val;
        best = model;
        report.best_epoch = epoch;
        since_best = 0;
      } else if (cfg.patience > 0 && ++since_best >= cfg.patience) {
        break;
      }
    }
  } catch (const NumericError& e) {
    report.diverged = true;
    report.message = e.what();
  }

  result.model = std::move(best);
  report.best_val_accuracy = has_val ? best_val : 0.0;
  if (!report.diverged) {
    const auto final_pass = forward(ctx, ctx.op.matrix, result.model, data.features);
    report.train_accuracy = accuracy(final_pass.logits, data.labels, data.train);
    report.test_accuracy = accuracy(final_pass.logits, data.labels, data.test);
  }
  for (std::size_t v = 0; v < data.num_vertices(); ++v)
    if (data.test[v] && data.labels[v]) ++report.test_count;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

ToyProblem separable_toy(std::size_t num_vertices, std::uint64_t seed) {
  if (num_vertices < 8) throw ArgumentError("separable_toy: need at least 8 vertices");
  Rng rng(seed);
  const std::size_t half = num_vertices / 2;
  std::vector<std::vector<Id>> edges;
  // Each cluster gets a spanning chain of triples plus a few random hyperedges.
  for (std::size_t c = 0; c < 2; ++c) {
    const std::size_t lo = c == 0 ? 0 : half;
    const std::size_t hi = c == 0 ? half : num_vertices;
    for (std::size_t v = lo; v + 1 < hi; v += 2) {
      std::vector<Id> e{static_cast<Id>(v), static_cast<Id>(v + 1)};
      if (v + 2 < hi) e.push_back(static_cast<Id>(v + 2));
      edges.push_back(std::move(e));
    }
    for (int extra = 0; extra < 2; ++extra) {
      std::vector<Id> e;
      for (std::size_t v = lo; v < hi; ++v)
        if (rng.bernoulli(0.4)) e.push_back(static_cast<Id>(v));
      if (e.empty()) e.push_back(static_cast<Id>(lo));
      edges.push_back(std::move(e));
    }
  }

  ToyProblem toy{Hypergraph(num_vertices, std::move(edges)), {}};
  Matrix x(num_vertices, 2);
  std::vector<std::optional<std::size_t>> labels(num_vertices);
  Split split;
  for (std::size_t v = 0; v < num_vertices; ++v) {
    const std::size_t label = v < half ? 0 : 1;
    labels[v] = label;
    x(v, label) = 1.0;
    const std::size_t pos = v < half ? v : v - half;
    if (pos % 4 == 0)
      split.train.push_back(static_cast<Id>(v));
    else if (pos % 4 == 1)
      split.val.push_back(static_cast<Id>(v));
    else
      split.test.push_back(static_cast<Id>(v));
  }
  toy.data = assemble_dataset(std::move(x), std::move(labels), split);
  return toy;
}

}  // namespace lexp
