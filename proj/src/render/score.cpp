#include "qharmony/render/render.hpp"

namespace qharmony::render {

composer::GenerateConfig config_of(const ScoreMetadata& metadata) {
  composer::GenerateConfig config;
  config.length = metadata.length;
  config.seed = metadata.seed;
  config.backend = metadata.backend;
  config.method = metadata.method;
  config.weights = metadata.weights;
  config.start_key = metadata.key;
  return config;
}

ScoreDocument generate_document(const composer::GenerateConfig& config) {
  ScoreDocument doc;
  doc.metadata.seed = config.seed;
  doc.metadata.backend = config.backend;
  doc.metadata.method = config.method;
  doc.metadata.weights = config.weights;
  doc.metadata.key = config.start_key;
  doc.metadata.length = config.length;
  doc.events = composer::generate(config);
  return doc;
}

}  // namespace qharmony::render
