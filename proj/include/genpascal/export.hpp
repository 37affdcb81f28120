#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "genpascal/geometry.hpp"
#include "genpascal/star_pairs.hpp"
#include "genpascal/triangle.hpp"

namespace genpascal {

/// {"n", "p", "r", "anchors": [[x, y], ...]} with integer anchors of T_{n,r}.
nlohmann::json squares_json(const SquareSet& squares);

/// "n,squares,positive_pairs" rows for n = 1..max_n.
std::string counters_csv(unsigned max_n);

/// [{"u", "v", "p", "r"}, ...]
nlohmann::json star_pairs_json(const std::vector<StarPair>& pairs);
std::string star_pairs_csv(const std::vector<StarPair>& pairs);

/// Dyadics as {"num": k, "exp": e}.
nlohmann::json dyadic_json(const Dyadic& d);
Dyadic dyadic_from_json(const nlohmann::json& j);

/// {"max_len", "p", "r", "n", "maximal", "segments": [{"a": [x, y], "b": [x, y]}, ...]}
nlohmann::json segments_json(const SegmentSet& set);
SegmentSet segments_from_json(const nlohmann::json& j);

struct ConvergenceRow {
  unsigned n;
  unsigned grid_exp;
  double estimate;
  double error_bound;
};

/// "n,grid_exp,estimate,error_bound", reals in shortest round-trip form.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

/// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

/// Writes to a sibling temporary file, then renames over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace genpascal
