#include <cstdio>
#include <sstream>

#include "tspsurf/milp.hpp"

namespace tspsurf {

namespace {

constexpr size_t kWrapColumn = 200;

std::string coef(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Emit "+ c name" / "- c name" terms, wrapping between terms so any
// LP-format reader with a line limit stays happy.
void emit_terms(std::ostringstream& out,
                const std::vector<std::pair<int, double>>& terms,
                const std::vector<Variable>& vars, bool lead_sign) {
  size_t col = 0;
  bool first = true;
  for (const auto& [vi, c] : terms) {
    std::string piece;
    if (first && !lead_sign && c >= 0)
      piece = coef(c) + " " + vars[vi].name;
    else
      piece = std::string(c < 0 ? "- " : "+ ") + coef(c < 0 ? -c : c) + " " +
              vars[vi].name;
    if (col + piece.size() + 1 > kWrapColumn && col > 0) {
      out << "\n  ";
      col = 2;
    } else if (col > 0) {
      out << " ";
      col += 1;
    }
    out << piece;
    col += piece.size();
    first = false;
  }
  if (terms.empty()) out << "0 " << (vars.empty() ? "x" : vars[0].name);
}

} // namespace

std::string write_lp(const MilpModel& model) {
  std::ostringstream out;
  out << "\\ builder: " << model.builder << "\n";
  out << "\\ instance: " << model.instance << "\n";
  out << "Minimize\n obj: ";
  std::vector<std::pair<int, double>> obj;
  for (int i = 0; i < static_cast<int>(model.variables().size()); ++i) {
    double c = model.variables()[i].objective;
    if (c != 0.0) obj.emplace_back(i, c);
  }
  emit_terms(out, obj, model.variables(), false);
  out << "\nSubject To\n";
  for (const auto& con : model.constraints()) {
    out << " " << con.name << ": ";
    emit_terms(out, con.terms, model.variables(), false);
    switch (con.sense) {
      case Sense::LE: out << " <= "; break;
      case Sense::EQ: out << " = "; break;
      case Sense::GE: out << " >= "; break;
    }
    out << coef(con.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const auto& v : model.variables()) {
    if (v.kind == VarKind::BINARY) continue;
    out << " " << coef(v.lower) << " <= " << v.name << " <= " << coef(v.upper)
        << "\n";
  }
  bool any_bin = false;
  for (const auto& v : model.variables())
    if (v.kind == VarKind::BINARY) any_bin = true;
  if (any_bin) {
    out << "Binaries\n";
    size_t col = 0;
    for (const auto& v : model.variables()) {
      if (v.kind != VarKind::BINARY) continue;
      if (col + v.name.size() + 1 > kWrapColumn && col > 0) {
        out << "\n";
        col = 0;
      }
      out << (col ? " " : " ") << v.name;
      col += v.name.size() + 1;
    }
    out << "\n";
  }
  out << "End\n";
  return out.str();
}

} // namespace tspsurf
