#include "simpdim/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "simpdim/genfun.hpp"

namespace simpdim {

namespace {

std::vector<Simplex> parse_face_array(const nlohmann::json& arr,
                                      const char* what) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Simplex> faces;
  faces.reserve(arr.size());
  for (const auto& f : arr) {
    if (!f.is_array())
      throw std::invalid_argument(std::string(what) +
                                  " entries must be label arrays");
    std::vector<int> verts;
    verts.reserve(f.size());
    for (const auto& v : f) {
      if (!v.is_number_integer())
        throw std::invalid_argument("labels must be integers");
      verts.push_back(v.get<int>());
    }
    faces.emplace_back(std::move(verts));
  }
  return faces;
}

}  // namespace

Complex complex_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("expected a JSON object");
  if (j.contains("generators"))
    return Complex::generate(parse_face_array(j["generators"], "generators"));
  if (j.contains("faces"))
    return Complex::from_faces(parse_face_array(j["faces"], "faces"));
  throw std::invalid_argument("need a \"generators\" or \"faces\" key");
}

std::string complex_to_json(const Complex& G) {
  nlohmann::json faces = nlohmann::json::array();
  for (const Simplex& x : G.faces())
    faces.push_back(x.vertices());
  nlohmann::json fv = nlohmann::json::array();
  for (const Int& c : f_vector(G).counts) {
    if (c.fits_slong_p() && sizeof(long) == 8)
      fv.push_back((std::int64_t)c.get_si());
    else
      fv.push_back(c.get_str());
  }
  nlohmann::json out;
  out["faces"] = std::move(faces);
  out["f_vector"] = std::move(fv);
  return out.dump();
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  bool first = true;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string a;
    if (!(ls >> a)) continue;
    if (first && a == "n") {
      first = false;
      if (!(ls >> n) || n < 0)
        throw std::invalid_argument("bad vertex count line");
      continue;
    }
    first = false;
    int u, v;
    try {
      u = std::stoi(a);
    } catch (...) {
      throw std::invalid_argument("bad edge line: " + line);
    }
    if (!(ls >> v)) throw std::invalid_argument("bad edge line: " + line);
    if (u < 0 || v < 0) throw std::invalid_argument("labels must be >= 0");
    edges.emplace_back(u, v);
    n = std::max(n, std::max(u, v) + 1);
  }
  return Graph(n, std::move(edges));
}

Graph graph_from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    if (i >= s.size()) throw std::invalid_argument("truncated graph6 string");
    int c = (unsigned char)s[i];
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6 byte out of range");
    return c - 63;
  };
  long long n;
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  if (byte(0) != 63) {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && byte(1) != 63) {
    n = ((long long)byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i < 8; ++i) n = n << 6 | byte(i);
    pos = 8;
  }
  if (n > 100000) throw std::invalid_argument("graph6 vertex count too large");
  std::vector<std::pair<int, int>> edges;
  int have = 0, group = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        group = byte(pos++);
        have = 6;
      }
      if (group >> --have & 1) edges.emplace_back(i, j);
    }
  if (pos != s.size())
    throw std::invalid_argument("trailing bytes in graph6 string");
  return Graph((int)n, std::move(edges));
}

std::string graph_to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw std::invalid_argument("graph6 emission supports n <= 62");
  std::string out(1, (char)(n + 63));
  int have = 0, group = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = group << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++have == 6) {
        out.push_back((char)(group + 63));
        have = 0;
        group = 0;
      }
    }
  if (have > 0) out.push_back((char)((group << (6 - have)) + 63));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out.push_back('"');
      for (char c : f) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
      }
      out.push_back('"');
    } else {
      out += f;
    }
  }
  out.push_back('\n');
  return out;
}

}  // namespace simpdim
