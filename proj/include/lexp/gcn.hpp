#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexp/expansions.hpp"
#include "lexp/hypergraph.hpp"
#include "lexp/matrix.hpp"
#include "lexp/random.hpp"
#include "lexp/sparse.hpp"

namespace lexp {

enum class Activation { relu, leaky_relu };

const char* activation_name(Activation a);

struct Dataset {
  Matrix features;                                 // |V| x d_i
  std::vector<std::optional<std::size_t>> labels;  // per vertex
  std::vector<bool> train;
  std::vector<bool> val;
  std::vector<bool> test;
  std::size_t num_classes = 0;

  std::size_t num_vertices() const { return features.rows(); }

  // Throws InconsistentInputError when masks overlap, have the wrong length,
  // a training vertex is unlabeled, or a label is out of range.
  void check() const;
};

struct Split {
  std::vector<Id> train;
  std::vector<Id> val;
  std::vector<Id> test;
};

// CSV, one row per vertex, no header.
Matrix read_features_csv(std::istream& in);
// "<vertex> <class>" per line; '#' comments and blank lines skipped.
std::vector<std::optional<std::size_t>> read_labels(std::istream& in, std::size_t num_vertices);
// {"train": [...], "val": [...], "test": [...]}
Split read_split_json(std::istream& in);

// num_classes is one more than the largest label seen. Runs check().
Dataset assemble_dataset(Matrix features, std::vector<std::optional<std::size_t>> labels,
                         const Split& split);

struct SamplingConfig {
  std::size_t delta_v = 8;  // cap on the vertex-similar neighbour set
  std::size_t delta_e = 8;  // cap on the hyperedge-similar neighbour set
};

struct TrainConfig {
  LineWeights weights;
  std::size_t layers = 2;
  std::size_t hidden = 16;
  double lr = 0.01;
  std::size_t epochs = 200;
  double weight_decay = 0.0;
  Activation activation = Activation::relu;
  double leaky_slope = 0.01;
  bool sampling = false;
  SamplingConfig sampling_config;
  std::uint64_t seed = 0;
  std::size_t patience = 0;  // epochs without validation gain before stopping; 0 disables
};

// "key = value" lines; '#' starts a comment. Unknown keys and malformed
// values raise ParseError.
TrainConfig parse_train_config(std::string_view text);

struct Model {
  std::vector<Matrix> thetas;  // d_i x d_h, d_h x d_h, ..., d_h x C
  Activation activation = Activation::relu;
  double leaky_slope = 0.01;
  LineWeights weights;

  std::size_t num_layers() const { return thetas.size(); }
};

// Glorot-uniform parameters, drawn in layer order from Rng(seed).
Model init_model(std::size_t in_dim, std::size_t hidden, std::size_t out_dim, std::size_t layers,
                 std::uint64_t seed);

// Everything the convolution needs about one hypergraph.
struct LineGraphContext {
  LineExpansion expansion;
  ProjectionSet projections;
  NormalizedOperator op;
};

// Throws InvalidInputError when the hypergraph has an empty hyperedge.
LineGraphContext prepare_context(const Hypergraph& h, LineWeights weights);

// h0 = P_v x.
Matrix feature_project(const ProjectionSet& p, const Matrix& x);
// sigma(op h theta); no activation when act is empty. Throws NumericError
// naming `layer` if the result is not finite.
Matrix conv_forward(const SparseMatrix& op, const Matrix& h, const Matrix& theta,
                    std::optional<Activation> act, double leaky_slope, std::size_t layer);
// y = P_v' h.
Matrix representation_project(const ProjectionSet& p, const Matrix& h);

// Mean softmax cross-entropy over masked vertices. Throws ArgumentError on an
// empty mask or a masked vertex without a label.
double cross_entropy(const Matrix& logits, const std::vector<std::optional<std::size_t>>& labels,
                     const std::vector<bool>& mask);

// Fraction of masked vertices whose argmax matches the label; 0 for an empty mask.
double accuracy(const Matrix& logits, const std::vector<std::optional<std::size_t>>& labels,
                const std::vector<bool>& mask);

struct ForwardPass {
  std::vector<Matrix> inputs;      // h^(k), k = 0..K-1
  std::vector<Matrix> aggregated;  // op h^(k)
  std::vector<Matrix> pre_activation;
  Matrix line_logits;              // last layer, per line node
  Matrix logits;                   // back-projected, per vertex
};

ForwardPass forward(const LineGraphContext& ctx, const SparseMatrix& op, const Model& model,
                    const Matrix& x);

// Training objective: cross-entropy on the training mask plus
// (weight_decay / 2) * sum of squared parameters.
double objective(const ForwardPass& pass, const Model& model, const Dataset& data,
                 double weight_decay);

// Exact gradients of objective() with respect to every theta. op_t must be
// the transpose of the operator used in the forward pass.
std::vector<Matrix> backward(const LineGraphContext& ctx, const SparseMatrix& op_t,
                             const Model& model, const ForwardPass& pass, const Dataset& data,
                             double weight_decay);

struct SampledNeighborhood {
  std::vector<Id> vertex_side;     // line nodes sharing the vertex
  double vertex_scale = 1.0;
  std::vector<Id> hyperedge_side;  // line nodes sharing the hyperedge
  double hyperedge_scale = 1.0;
};

// Keeps a neighbour set whole when it fits under its threshold, otherwise
// draws `threshold` distinct members and scales by |N| / threshold.
SampledNeighborhood sample_neighbors(const LineExpansion& le, std::size_t node,
                                     const SamplingConfig& cfg, Rng& rng);

// One sampled draw of the normalized operator. Off-diagonal entries reuse
// the full-graph degrees, so the expectation equals ctx.op.matrix. The result
// is not symmetric.
SparseMatrix sampled_operator(const LineGraphContext& ctx, const SamplingConfig& cfg, Rng& rng);

struct EpochRecord {
  std::size_t epoch = 0;
  double loss = 0.0;
  double val_accuracy = 0.0;
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  std::size_t best_epoch = 0;
  double best_val_accuracy = 0.0;
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  std::size_t test_count = 0;
  bool diverged = false;
  std::string message;
  double wall_seconds = 0.0;
  TrainConfig config;
};

// Fixed field order; wall time only when asked so that repeated runs are
// byte-identical by default.
std::string report_json(const TrainReport& report, bool include_wall_time = false);

struct TrainResult {
  Model model;
  TrainReport report;
};

// Full-batch gradient descent. Keeps the model with the best validation
// accuracy (the final one when there is no validation set). A non-finite
// loss stops training with report.diverged set.
TrainResult train(const Hypergraph& h, const Dataset& data, const TrainConfig& cfg);

// Two disjoint clusters of vertices, hyperedges inside each cluster, one-hot
// features equal to the label.
struct ToyProblem {
  Hypergraph hypergraph;
  Dataset data;
};
ToyProblem separable_toy(std::size_t num_vertices = 20, std::uint64_t seed = 0);

}  // namespace lexp
