#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twotower/matrix.hpp"

namespace twotower {

enum class Activation { Tanh, Relu };

Activation activation_from_string(const std::string& name);
std::string to_string(Activation a);

// weight is in_dim x out_dim, bias has out_dim entries
struct Layer {
  Matrix weight;
  std::vector<double> bias;
};

// MLP tower: hidden layers use the configured activation, the final layer is
// linear and its output gets L2-normalized by forward().
struct TowerParams {
  std::vector<Layer> layers;
  Activation activation = Activation::Tanh;

  std::size_t input_dim() const;
  std::size_t output_dim() const;
  void validate() const;  // consecutive dims chain, all entries finite
};

struct TwoTowerModel {
  TowerParams image_tower;
  TowerParams text_tower;
  double tau = 0.07;
  // When true, log(tau) is a trainable parameter updated by the optimizer.
  bool learnable_tau = false;

  std::size_t embed_dim() const { return image_tower.output_dim(); }
  void validate() const;
};

// Shadow copy of the student updated as p_t <- decay*p_t + (1-decay)*p_s.
// Never receives gradients.
struct EmaTeacher {
  TwoTowerModel params;
  double decay = 0.999;
};

// Everything forward() records so the backward pass can produce exact
// analytic gradients.
struct ForwardCache {
  // layer_inputs[k] is the input to layer k; layer_inputs[0] is the batch
  std::vector<Matrix> layer_inputs;
  std::vector<Matrix> pre_activations;
  Matrix pre_norm;              // final layer output, before normalization
  Matrix embeddings;            // unit rows
  std::vector<double> row_norms;
};

struct ModelInit {
  std::uint64_t seed = 0;
  std::size_t image_dim = 0;
  std::size_t text_dim = 0;
  std::vector<std::size_t> hidden;  // empty means a single linear layer
  std::size_t embed_dim = 0;
  double tau = 0.07;
  Activation activation = Activation::Tanh;
  bool learnable_tau = false;
};

// Deterministic per seed. Weights are scaled-uniform with bound
// sqrt(6 / (in + out)); biases start at zero.
TwoTowerModel init_model(const ModelInit& init);

ForwardCache forward(const TowerParams& tower, const Matrix& batch);

EmaTeacher ema_init(const TwoTowerModel& student, double decay);
void ema_update(EmaTeacher& teacher, const TwoTowerModel& student);

// Gradients (or momentum buffers) shaped exactly like the model parameters.
struct TowerGrads {
  std::vector<Layer> layers;
};

struct GradientSet {
  TowerGrads image_tower;
  TowerGrads text_tower;
  double log_tau = 0.0;  // meaningful only when the model has learnable_tau

  static GradientSet zeros_like(const TwoTowerModel& model);
  void add_scaled(const GradientSet& other, double scale);  // this += scale * other
};

// Named views over every tower parameter array, in a fixed order: image tower
// layer 0 weight, layer 0 bias, layer 1 weight, ..., then the text tower.
// The same order is used by the optimizer, EMA updates and checkpoints.
struct ParamView {
  std::string name;
  std::span<double> values;
};
std::vector<ParamView> param_views(TwoTowerModel& model);
std::vector<ParamView> grad_views(GradientSet& grads);

}  // namespace twotower
