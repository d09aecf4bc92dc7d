#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nodal/e8.hpp"
#include "nodal/flow.hpp"
#include "nodal/picard.hpp"
#include "nodal/riccati.hpp"

namespace nodal::io {

using nlohmann::json;

// {"table":"2","rows":[{"key":<rank>,"types":[...]}]} and the 3/4 variants
// keyed by affine type string.
json table_json(int which);
std::string table_text(int which);

// {"type": "...", "vectors": [[8 doubled ints], ...]}
json embedding_json(const rootlat::RootEmbedding& emb);

// {"type":"E6","loci":[{"name","constraint","charts":{...},"riccati":{...}}]}
json loci_json(atlas::PainleveType pt);

json opcheck_json(const rootlat::OpCheckReport& rep);

// {"components":[{"vector":[10 ints],"multiplicity":m},...],
//  "anticanonical":[10 ints] (optional, defaults to the weighted sum),
//  "section":[10 ints] (optional)}
rootlat::PicardConfig picard_from_json(const json& j);

// header t_re,t_im,chart,x_re,x_im,y_re,y_im; floats at 17 significant digits
void write_trajectory_csv(std::ostream& os, const flow::Trajectory& traj);

json trajectory_events_json(const flow::Trajectory& traj);

std::string fmt17(double v);

}  // namespace nodal::io
