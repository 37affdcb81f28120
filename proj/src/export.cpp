#include "genpascal/export.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace genpascal {

nlohmann::json squares_json(const SquareSet& squares) {
  nlohmann::json anchors = nlohmann::json::array();
  for (const auto& [x, y] : squares.anchors) anchors.push_back({x, y});
  return {{"n", squares.depth}, {"p", squares.p}, {"r", squares.r}, {"anchors", std::move(anchors)}};
}

std::string counters_csv(unsigned max_n) {
  std::string out = "n,squares,positive_pairs\n";
  for (unsigned n = 1; n <= max_n; ++n) {
    out += std::to_string(n) + "," + std::to_string(count_unit_squares(n)) + "," +
           std::to_string(count_positive_pairs(n)) + "\n";
  }
  return out;
}

nlohmann::json star_pairs_json(const std::vector<StarPair>& pairs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& pair : pairs) {
    out.push_back({{"u", pair.u.str()},
                   {"v", pair.v.str()},
                   {"p", pair.modulus.prime().value()},
                   {"r", pair.modulus.residue()}});
  }
  return out;
}

std::string star_pairs_csv(const std::vector<StarPair>& pairs) {
  std::string out = "u,v,p,r\n";
  for (const auto& pair : pairs) {
    out += pair.u.str() + "," + pair.v.str() + "," + std::to_string(pair.modulus.prime().value()) + "," +
           std::to_string(pair.modulus.residue()) + "\n";
  }
  return out;
}

nlohmann::json dyadic_json(const Dyadic& d) { return {{"num", d.num()}, {"exp", d.exp()}}; }

Dyadic dyadic_from_json(const nlohmann::json& j) {
  return Dyadic(j.at("num").get<std::int64_t>(), j.at("exp").get<unsigned>());
}

namespace {

nlohmann::json point_json(const Point& p) { return nlohmann::json::array({dyadic_json(p.x), dyadic_json(p.y)}); }

Point point_from_json(const nlohmann::json& j) { return {dyadic_from_json(j.at(0)), dyadic_from_json(j.at(1))}; }

}  // namespace

nlohmann::json segments_json(const SegmentSet& set) {
  nlohmann::json segments = nlohmann::json::array();
  for (const auto& s : set.segments) segments.push_back({{"a", point_json(s.a)}, {"b", point_json(s.b)}});
  return {{"max_len", set.provenance.max_len},
          {"p", set.provenance.p},
          {"r", set.provenance.r},
          {"n", set.provenance.n},
          {"maximal", set.maximal},
          {"segments", std::move(segments)}};
}

SegmentSet segments_from_json(const nlohmann::json& j) {
  SegmentSet set;
  set.provenance = {j.at("max_len").get<unsigned>(), j.at("p").get<std::uint32_t>(), j.at("r").get<std::uint32_t>(),
                    j.at("n").get<unsigned>()};
  set.maximal = j.at("maximal").get<bool>();
  for (const auto& s : j.at("segments")) set.segments.push_back({point_from_json(s.at("a")), point_from_json(s.at("b"))});
  return set;
}

std::string format_real(double value) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,grid_exp,estimate,error_bound\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + std::to_string(row.grid_exp) + "," + format_real(row.estimate) + "," +
           format_real(row.error_bound) + "\n";
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!file) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace genpascal
