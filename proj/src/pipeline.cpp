#include "cartfact/pipeline.hpp"

#include "cartfact/errors.hpp"
#include "cartfact/traversal.hpp"

namespace cartfact {

PipelineResult run_pipeline(const Graph& g, const VertexSubset& w, const PipelineOptions& options) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  PipelineResult r;
  r.covering = cover(g, w, options.cover);
  r.assignment = assign_coordinates(r.covering, options.coordinates);
  r.h = r.assignment.surviving();
  r.factors = extract_factors(r.h);
  return r;
}

}  // namespace cartfact
