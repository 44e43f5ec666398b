#include "tspsurf/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace tspsurf {

namespace {

// TSPLIB nearest-integer rule: nint(x) = (int)(x + 0.5).
double nint(double x) { return std::floor(x + 0.5); }

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

// splitmix64: fixed algorithm so generated instances are identical on every
// platform, unlike the unspecified std::uniform_real_distribution.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double next_double() { // uniform in [0,1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

std::vector<double> derive_distances(const std::vector<Point>& coords,
                                     EdgeWeightKind kind) {
  const int n = static_cast<int>(coords.size());
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dx = coords[i].x - coords[j].x;
      double dy = coords[i].y - coords[j].y;
      double v = std::sqrt(dx * dx + dy * dy);
      if (kind == EdgeWeightKind::EUC_2D_ROUNDED) v = nint(v);
      d[static_cast<size_t>(i) * n + j] = v;
      d[static_cast<size_t>(j) * n + i] = v;
    }
  }
  return d;
}

TspInstance parse_tsplib(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::string> header;
  std::vector<std::string> section_lines;
  std::string section;
  std::vector<Point> coords;
  std::vector<double> matrix_values;
  int dimension = -1;
  bool saw_coords = false, saw_matrix = false;

  auto parse_header_line = [&](const std::string& l) -> bool {
    size_t colon = l.find(':');
    if (colon == std::string::npos) return false;
    std::string key = upper(trim(l.substr(0, colon)));
    // Keys are single uppercase words or underscore-joined words.
    if (key.empty() ||
        key.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789") !=
            std::string::npos)
      return false;
    header[key] = trim(l.substr(colon + 1));
    return true;
  };

  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    std::string u = upper(t);
    if (u == "EOF") break;
    if (u == "NODE_COORD_SECTION" || u == "EDGE_WEIGHT_SECTION" ||
        u == "DISPLAY_DATA_SECTION") {
      section = u;
      continue;
    }
    if (section.empty()) {
      if (!parse_header_line(t))
        throw TspError(ErrorCode::MalformedSection,
                       "unrecognized header line: " + t);
      continue;
    }
    if (section == "NODE_COORD_SECTION") {
      std::istringstream ls(t);
      int idx;
      double x, y;
      if (!(ls >> idx >> x >> y))
        throw TspError(ErrorCode::MalformedSection,
                       "bad NODE_COORD_SECTION line: " + t);
      coords.push_back({x, y});
      saw_coords = true;
    } else if (section == "EDGE_WEIGHT_SECTION") {
      std::istringstream ls(t);
      double v;
      while (ls >> v) matrix_values.push_back(v);
      saw_matrix = true;
    }
    // DISPLAY_DATA_SECTION is ignored.
  }

  auto it = header.find("DIMENSION");
  if (it == header.end())
    throw TspError(ErrorCode::MalformedSection, "missing DIMENSION");
  dimension = std::stoi(it->second);
  if (dimension < 1)
    throw TspError(ErrorCode::MalformedSection, "non-positive DIMENSION");

  if (header.count("TYPE") && upper(header["TYPE"]) != "TSP")
    throw TspError(ErrorCode::UnsupportedFormat,
                   "TYPE must be TSP, got " + header["TYPE"]);

  std::string wt = header.count("EDGE_WEIGHT_TYPE")
                       ? upper(header["EDGE_WEIGHT_TYPE"])
                       : std::string();

  TspInstance inst;
  inst.name = header.count("NAME") ? header["NAME"] : "unnamed";
  inst.n = dimension;

  if (wt == "EUC_2D" || wt == "EUC_2D_EXACT") {
    if (!saw_coords)
      throw TspError(ErrorCode::MalformedSection, "missing NODE_COORD_SECTION");
    if (static_cast<int>(coords.size()) != dimension)
      throw TspError(ErrorCode::MalformedSection,
                     "coordinate count " + std::to_string(coords.size()) +
                         " disagrees with DIMENSION " +
                         std::to_string(dimension));
    inst.kind = (wt == "EUC_2D") ? EdgeWeightKind::EUC_2D_ROUNDED
                                 : EdgeWeightKind::EUC_2D_EXACT;
    inst.coords = coords;
    inst.dist = derive_distances(coords, inst.kind);
  } else if (wt == "EXPLICIT") {
    std::string fmt = header.count("EDGE_WEIGHT_FORMAT")
                          ? upper(header["EDGE_WEIGHT_FORMAT"])
                          : std::string("FULL_MATRIX");
    if (fmt != "FULL_MATRIX")
      throw TspError(ErrorCode::UnsupportedFormat,
                     "EDGE_WEIGHT_FORMAT " + fmt + " not supported");
    if (!saw_matrix)
      throw TspError(ErrorCode::MalformedSection,
                     "missing EDGE_WEIGHT_SECTION");
    size_t want = static_cast<size_t>(dimension) * dimension;
    if (matrix_values.size() != want)
      throw TspError(ErrorCode::MalformedSection,
                     "matrix entry count " +
                         std::to_string(matrix_values.size()) +
                         " disagrees with DIMENSION^2 " + std::to_string(want));
    inst.kind = EdgeWeightKind::EXPLICIT;
    inst.dist = matrix_values;
    if (saw_coords && static_cast<int>(coords.size()) == dimension)
      inst.coords = coords; // display coordinates, if any
    // Enforce symmetry and zero diagonal.
    for (int i = 0; i < dimension; ++i) {
      if (inst.dist[static_cast<size_t>(i) * dimension + i] != 0.0)
        throw TspError(ErrorCode::MalformedSection, "nonzero diagonal entry");
      for (int j = i + 1; j < dimension; ++j) {
        double a = inst.dist[static_cast<size_t>(i) * dimension + j];
        double b = inst.dist[static_cast<size_t>(j) * dimension + i];
        if (a != b)
          throw TspError(ErrorCode::MalformedSection,
                         "asymmetric explicit matrix");
        if (a < 0)
          throw TspError(ErrorCode::MalformedSection, "negative edge length");
      }
    }
  } else {
    throw TspError(ErrorCode::UnsupportedFormat,
                   wt.empty() ? "missing EDGE_WEIGHT_TYPE"
                              : "EDGE_WEIGHT_TYPE " + wt + " not supported");
  }
  return inst;
}

std::string write_tsplib(const TspInstance& inst) {
  std::ostringstream out;
  out << "NAME : " << inst.name << "\n";
  out << "TYPE : TSP\n";
  out << "DIMENSION : " << inst.n << "\n";
  switch (inst.kind) {
    case EdgeWeightKind::EUC_2D_ROUNDED:
      out << "EDGE_WEIGHT_TYPE : EUC_2D\n";
      break;
    case EdgeWeightKind::EUC_2D_EXACT:
      out << "EDGE_WEIGHT_TYPE : EUC_2D_EXACT\n";
      break;
    case EdgeWeightKind::EXPLICIT:
      out << "EDGE_WEIGHT_TYPE : EXPLICIT\n";
      out << "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n";
      break;
  }
  if (inst.kind == EdgeWeightKind::EXPLICIT) {
    out << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i < inst.n; ++i) {
      for (int j = 0; j < inst.n; ++j) {
        out << (j ? " " : "")
            << fmt17(inst.dist[static_cast<size_t>(i) * inst.n + j]);
      }
      out << "\n";
    }
  } else {
    out << "NODE_COORD_SECTION\n";
    const auto& c = *inst.coords;
    for (int i = 0; i < inst.n; ++i)
      out << (i + 1) << " " << fmt17(c[i].x) << " " << fmt17(c[i].y) << "\n";
  }
  out << "EOF\n";
  return out.str();
}

TspInstance gen_random(int n, std::uint64_t seed, RandomMode mode) {
  if (n < 4)
    throw TspError(ErrorCode::InvalidArgument, "gen_random requires n >= 4");
  SplitMix64 rng(seed ^ (mode == RandomMode::NONMETRIC ? 0x6e6du : 0x6575u));
  TspInstance inst;
  inst.n = n;
  if (mode == RandomMode::EUCLIDEAN) {
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
      pts[i].x = rng.next_double();
      pts[i].y = rng.next_double();
    }
    inst.name = "rand-euc-n" + std::to_string(n) + "-s" + std::to_string(seed);
    inst.kind = EdgeWeightKind::EUC_2D_EXACT;
    inst.coords = std::move(pts);
    inst.dist = derive_distances(*inst.coords, inst.kind);
  } else {
    inst.name = "rand-nonmetric-n" + std::to_string(n) + "-s" +
                std::to_string(seed);
    inst.kind = EdgeWeightKind::EXPLICIT;
    inst.dist.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double w = 1.0 + 99.0 * rng.next_double();
        inst.dist[static_cast<size_t>(i) * n + j] = w;
        inst.dist[static_cast<size_t>(j) * n + i] = w;
      }
  }
  return inst;
}

TspInstance gen_nested_hexagons() {
  const double r_in = 1.0, r_out = 2.0;
  std::vector<Point> pts;
  pts.push_back({0.0, 0.0});
  for (double r : {r_in, r_out}) {
    for (int k = 0; k < 6; ++k) {
      double ang = std::numbers::pi / 2 + k * std::numbers::pi / 3;
      pts.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
  }
  TspInstance inst;
  inst.name = "hexagons13";
  inst.n = 13;
  inst.kind = EdgeWeightKind::EUC_2D_EXACT;
  inst.coords = std::move(pts);
  inst.dist = derive_distances(*inst.coords, inst.kind);
  return inst;
}

TspInstance gen_tnm(int n, bool exact) {
  // Points on the edges of a projected tetrahedron, scaled by 10^4 and
  // rounded to integers (Hougardy & Zhong, "Hard to solve instances of the
  // Euclidean TSP"). Valid for n > 50, n % 3 == 1.
  if (n <= 50 || n % 3 != 1)
    throw TspError(ErrorCode::InvalidArgument,
                   "tnm requires n > 50 with n % 3 == 1");
  const double scale = 10000.0;
  const int a = (3 * n - 40) / 10;
  const int m = (n + 2) / 3 - a;
  std::vector<Point> pts;
  auto add = [&](double x, double y) {
    if (exact)
      pts.push_back({x * scale, y * scale});
    else
      pts.push_back({std::round(x * scale), std::round(y * scale)});
  };
  const double s3 = std::sqrt(3.0);
  for (int i = 1; i <= a; ++i) {
    add(a - i / 2.0, i * s3 / 2.0);
    add(a / 2.0 - i / 2.0, (a - i) * s3 / 2.0);
    add(i, 0.0);
  }
  for (int j = 1; j < m; ++j) {
    add(j * a / (2.0 * m), j * a / (2.0 * s3 * m));
    add(a - j * a / (2.0 * m), j * a / (2.0 * s3 * m));
    add(a / 2.0, a * s3 / 2.0 - j * a / (s3 * m));
  }
  add(a / 2.0, a / (2.0 * s3));
  TspInstance inst;
  inst.name = "Tnm" + std::to_string(n) + (exact ? "exact" : "");
  inst.n = n;
  inst.kind = exact ? EdgeWeightKind::EUC_2D_EXACT
                    : EdgeWeightKind::EUC_2D_ROUNDED;
  inst.coords = std::move(pts);
  inst.dist = derive_distances(*inst.coords, inst.kind);
  return inst;
}

TspInstance load_instance(const std::string& path_or_spec) {
  if (path_or_spec.rfind("gen:", 0) == 0) {
    std::vector<std::string> parts;
    std::stringstream ss(path_or_spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    std::map<std::string, std::string> kv;
    for (size_t i = 2; i < parts.size(); ++i) {
      size_t eq = parts[i].find('=');
      if (eq == std::string::npos)
        throw TspError(ErrorCode::InvalidArgument,
                       "bad generator parameter: " + parts[i]);
      kv[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
    }
    const std::string& what = parts.size() > 1 ? parts[1] : "";
    auto geti = [&](const std::string& k, int dflt) {
      return kv.count(k) ? std::stoi(kv[k]) : dflt;
    };
    if (what == "euclidean" || what == "nonmetric") {
      int n = geti("n", -1);
      if (n < 0)
        throw TspError(ErrorCode::InvalidArgument, "generator needs n=<int>");
      std::uint64_t seed = static_cast<std::uint64_t>(geti("seed", 0));
      return gen_random(n, seed,
                        what == "euclidean" ? RandomMode::EUCLIDEAN
                                            : RandomMode::NONMETRIC);
    }
    if (what == "hexagons") return gen_nested_hexagons();
    if (what == "tnm") return gen_tnm(geti("n", 199), geti("exact", 0) != 0);
    throw TspError(ErrorCode::InvalidArgument,
                   "unknown generator: " + path_or_spec);
  }
  std::ifstream f(path_or_spec);
  if (!f)
    throw TspError(ErrorCode::IoError, "cannot open " + path_or_spec);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_tsplib(buf.str());
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::MalformedSection: return "MalformedSection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ComplexTooLarge: return "ComplexTooLarge";
    case ErrorCode::DegenerateGeometry: return "DegenerateGeometry";
    case ErrorCode::NotPlanarCompatible: return "NotPlanarCompatible";
    case ErrorCode::TooFewTriangles: return "TooFewTriangles";
    case ErrorCode::DisconnectedEdgeSet: return "DisconnectedEdgeSet";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::BackendParseError: return "BackendParseError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotHamiltonian: return "NotHamiltonian";
    case ErrorCode::MultipleCycles: return "MultipleCycles";
    case ErrorCode::NoCoordinates: return "NoCoordinates";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

} // namespace tspsurf
