#pragma once

// JSON interchange for spaces, lattices, ad-frames and check reports, and
// DOT rendering of Hasse diagrams.

#include <string>

#include "json.hpp"

#include "adlab/adframe.hpp"
#include "adlab/finord.hpp"
#include "adlab/theorems.hpp"

namespace adlab {

using Json = nlohmann::ordered_json;

// Subsets are written as sorted arrays of point indices.
Json subset_to_json(Subset s);
Subset subset_from_json(const Json& j, int n);

/// {"points", "opens", "leq", "complete"}; leq lists the strict pairs.
Json space_to_json(const Space& x);
/// Honors "complete" and an optional "strict". Throws InvalidInput on
/// malformed JSON and the finord errors on bad content.
Space space_from_json(const Json& j);

/// {"size", "leq", "labels"?}; leq lists covering pairs. Ingest closes leq
/// reflexively and transitively; labels, when present, must induce the same
/// order.
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);

Json adframe_to_json(const AdFrame& f);
/// Structural checks only (indices in range); axioms are left to
/// validate_adframe.
AdFrame adframe_from_json(const Json& j);

Json validation_to_json(const ValidationReport& r);

/// One line of the report stream. `with_ms` off gives the canonical form.
Json report_to_json(const CheckReport& r, bool with_ms = true);

/// Renderings cap out at this many nodes (TooLarge beyond).
inline constexpr int kDotNodeCap = 256;

std::string render_lattice_dot(const Lattice& l, const std::string& name = "lattice");
/// Hasse diagram of the preorder; equivalent points are joined by undirected
/// dashed edges. Opens are listed in the graph label.
std::string render_space_dot(const Space& x);
/// Omega and L side by side with one edge style per relation the variant reads.
std::string render_adframe_dot(const AdFrame& f);

}  // namespace adlab
