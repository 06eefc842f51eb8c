#pragma once

#include <optional>

#include "cartfact/coordinatizer.hpp"
#include "cartfact/covering.hpp"
#include "cartfact/factorizer.hpp"

namespace cartfact {

struct PipelineOptions {
  CoverOptions cover;
  CoordinatizeOptions coordinates;
};

struct PipelineResult {
  CoveringResult covering;
  CoordinateAssignment assignment;
  CoordinatizedGraph h;
  FactorSet factors;
};

/// cover -> assign_coordinates -> extract_factors. Throws Disconnected if g
/// is not connected.
PipelineResult run_pipeline(const Graph& g, const VertexSubset& w, const PipelineOptions& options = {});

}  // namespace cartfact
