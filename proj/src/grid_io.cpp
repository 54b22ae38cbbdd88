#include <fstream>

#include "bjop/errors.hpp"
#include "bjop/grid.hpp"
#include "json.hpp"

namespace bjop {

void write_json(const GridFunction& u, const std::string& path) {
  nlohmann::json j;
  j["grid"] = {{"N", u.grid().N}, {"L", u.grid().L}};
  j["domain"] = u.domain() == Domain::Space ? "space" : "frequency";
  std::vector<double> re, im;
  re.reserve(u.values().size());
  im.reserve(u.values().size());
  for (const cplx& z : u.values()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["re"] = re;
  j["im"] = im;
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

GridFunction read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed json in " + path + ": " + e.what());
  }
  try {
    Grid g(j.at("grid").at("N").get<int>(), j.at("grid").at("L").get<double>());
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    if (re.size() != im.size() || re.size() != static_cast<std::size_t>(g.N))
      throw IoError("sample arrays do not match grid in " + path);
    std::vector<cplx> v(re.size());
    for (std::size_t m = 0; m < v.size(); ++m) v[m] = cplx{re[m], im[m]};
    const Domain d = j.value("domain", "space") == "frequency" ? Domain::Frequency : Domain::Space;
    return GridFunction(g, std::move(v), d);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad grid json in " + path + ": " + e.what());
  }
}

}  // namespace bjop
