#ifndef TSPSURF_MILP_HPP
#define TSPSURF_MILP_HPP

#include <string>
#include <vector>

#include "tspsurf/errors.hpp"

namespace tspsurf {

enum class VarKind { BINARY, CONTINUOUS };

enum class Sense { LE, EQ, GE };

/// Semantic role of a variable, used to decode solver values back into
/// surfaces and tours without string parsing.
struct VarRole {
  enum class Kind {
    TRIANGLE,   // x_t          (i = triangle index)
    EDGE,       // y_i_j        (i, j = city pair)
    INCIDENCE,  // z_t_i_j      (t = triangle, i/j = city pair)
    ARC,        // aF_src_dst   (i, j = graph node ids)
    FLOW,       // f_src_dst
    ROOT,       // r_t
    LEVEL,      // u_node       (i = graph node id)
    DUAL_EDGE,  // wD_t1_t2     (i, j = triangle indices)
    DIRECTED,   // xd_i_j       (baseline arc city i -> city j)
    CITY_LEVEL, // u_i          (baseline MTZ level)
    OTHER,
  };
  Kind kind = Kind::OTHER;
  int t = -1;
  int i = -1;
  int j = -1;
};

struct Variable {
  std::string name;
  VarKind kind = VarKind::BINARY;
  double lower = 0.0;
  double upper = 1.0;
  double objective = 0.0;
  VarRole role;
};

struct Constraint {
  std::string name;
  std::vector<std::pair<int, double>> terms; // (variable index, coefficient)
  Sense sense = Sense::LE;
  double rhs = 0.0;
};

/**
 * @brief Solver-agnostic MILP: variables, linear constraints and a
 * minimization objective, with enough metadata to decode solutions.
 */
class MilpModel {
public:
  std::string builder;  // e.g. "surface-general-flow"
  std::string instance; // instance name

  int add_variable(const std::string& name, VarKind kind, double lower,
                   double upper, double objective, VarRole role = {});
  void add_constraint(const std::string& name,
                      std::vector<std::pair<int, double>> terms, Sense sense,
                      double rhs);

  int variable_index(const std::string& name) const; // -1 if absent

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return cons_; }

  /// Decode map as JSON: variable name -> {role, indices}.
  std::string decode_map_json() const;

private:
  std::vector<Variable> vars_;
  std::vector<Constraint> cons_;
};

/// Deterministic CPLEX-LP-format text; coefficients carry 17 significant
/// digits so the file is bit-reproducible.
std::string write_lp(const MilpModel& model);

} // namespace tspsurf

#endif
