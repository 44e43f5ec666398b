#!/usr/bin/env python3
"""File-based MILP backend: CPLEX-LP text in, JSON solution out.

Two engines, both backed by the HiGHS build that ships inside scipy:

  * "highs" (default): scipy's vendored HiGHS bindings read the LP file
    natively and honor random_seed; fastest and closest to a standalone
    HiGHS executable.
  * "scipy": the public scipy.optimize.milp API. The LP file is parsed
    here and handed over as matrices. Random seeds are emulated by a
    deterministic permutation of variable and constraint order, which
    changes the solver's traversal but not the model.

Usage:
    milp_backend.py --lp model.lp --out sol.json [--time-limit S] [--seed K]
    milp_backend.py --batch jobs.json

jobs.json is a list of {"lp", "out", "time_limit", "mip_gap", "seed"}.
"""

import argparse
import json
import math
import sys
import time

INF = float("inf")
SENSES = ("<=", ">=", "=")


# ----------------------------------------------------------------------
# Engine 1: vendored HiGHS bindings.

def _highs_core():
    from scipy.optimize._highspy import _core

    return _core


def solve_with_highs(lp_path, time_limit, mip_gap, seed):
    core = _highs_core()
    h = core._Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("time_limit", float(time_limit))
    h.setOptionValue("random_seed", int(seed))
    h.setOptionValue("mip_rel_gap", float(mip_gap))
    if h.readModel(lp_path) != core.HighsStatus.kOk:
        raise ValueError("HiGHS could not read " + lp_path)
    t0 = time.time()
    h.run()
    runtime = time.time() - t0
    info = h.getInfo()
    status = h.getModelStatus()

    out = {
        "backend": "scipy-highs",
        "runtime_s": runtime,
        "seed": seed,
        "nodes": int(info.mip_node_count),
    }
    if math.isfinite(info.mip_dual_bound):
        out["dual_bound"] = float(info.mip_dual_bound)

    name = status.name
    if name == "kOptimal":
        out["status"] = "OPTIMAL"
    elif name == "kInfeasible":
        out["status"] = "INFEASIBLE"
    elif name in ("kTimeLimit", "kIterationLimit", "kSolutionLimit"):
        out["status"] = "TIME_LIMIT"
    else:
        out["status"] = "ERROR"
        out["message"] = name

    if out["status"] == "OPTIMAL":
        out["objective"] = float(info.objective_function_value)
        lp = h.getLp()
        values = h.getSolution().col_value
        out["values"] = {
            lp.col_names_[i]: float(values[i]) for i in range(lp.num_col_)
        }
    return out


# ----------------------------------------------------------------------
# Engine 2: public scipy API with a local LP parser.

def lp_sections(text):
    """Split LP text into per-section token lists, comments removed."""
    section = None
    sections = {"objective": [], "constraints": [], "bounds": [],
                "binaries": []}
    headers = {
        "minimize": "objective",
        "subject to": "constraints",
        "st": "constraints",
        "s.t.": "constraints",
        "bounds": "bounds",
        "binaries": "binaries",
        "binary": "binaries",
        "end": None,
    }
    for raw in text.splitlines():
        line = raw
        if "\\" in line:
            line = line[: line.index("\\")]
        stripped = line.strip()
        if not stripped:
            continue
        low = stripped.lower()
        if low in headers:
            section = headers[low]
            continue
        if low == "maximize" or low.startswith("general"):
            raise ValueError("unsupported section: " + stripped)
        if section is None:
            continue
        toks = stripped.replace("<=", " <= ").replace(">=", " >= ").split()
        sections[section].extend(toks)
    return sections


def parse_lp(text):
    """Parse the restricted CPLEX-LP dialect produced by the LP writer.

    Statement boundaries are token-determined: labels end with ':', each
    constraint has exactly one sense token followed by its rhs. Line
    wrapping is therefore irrelevant.
    """
    sections = lp_sections(text)
    seen_names = []
    seen_set = set()

    def note_name(name):
        if name not in seen_set:
            seen_set.add(name)
            seen_names.append(name)

    def is_number(tok):
        try:
            float(tok)
            return True
        except ValueError:
            return False

    def parse_terms(tokens):
        terms = []
        sign, coef = 1.0, None
        for tok in tokens:
            if tok == "+":
                sign, coef = 1.0, None
            elif tok == "-":
                sign, coef = -1.0, None
            elif is_number(tok):
                coef = float(tok) if coef is None else coef * float(tok)
            else:
                terms.append((tok, sign * (1.0 if coef is None else coef)))
                note_name(tok)
                sign, coef = 1.0, None
        return terms

    obj_tokens = sections["objective"]
    if obj_tokens and obj_tokens[0].endswith(":"):
        obj_tokens = obj_tokens[1:]
    objective = {}
    for name, coef in parse_terms(obj_tokens):
        objective[name] = objective.get(name, 0.0) + coef

    constraints = []
    tokens = sections["constraints"]
    i = 0
    while i < len(tokens):
        if not tokens[i].endswith(":"):
            raise ValueError("expected constraint label, got " + tokens[i])
        j = i + 1
        while j < len(tokens) and tokens[j] not in SENSES:
            j += 1
        if j >= len(tokens) or j + 1 >= len(tokens):
            raise ValueError("constraint missing sense or rhs: " + tokens[i])
        sense = tokens[j]
        rhs = float(tokens[j + 1])
        constraints.append((parse_terms(tokens[i + 1 : j]), sense, rhs))
        i = j + 2

    bounds = {}
    btoks = sections["bounds"]
    i = 0
    while i < len(btoks):
        if i + 4 < len(btoks) and btoks[i + 1] == "<=" and btoks[i + 3] == "<=":
            name = btoks[i + 2]
            bounds[name] = (float(btoks[i]), float(btoks[i + 4]))
            note_name(name)
            i += 5
        else:
            raise ValueError("unsupported bounds syntax near " + btoks[i])

    binaries = set()
    for name in sections["binaries"]:
        binaries.add(name)
        note_name(name)

    return seen_names, objective, constraints, bounds, binaries


def solve_with_scipy(lp_path, time_limit, mip_gap, seed):
    import numpy as np
    from scipy import sparse
    from scipy.optimize import Bounds, LinearConstraint, milp

    with open(lp_path) as f:
        text = f.read()
    names, objective, constraints, bounds_map, binaries = parse_lp(text)

    order = np.arange(len(names))
    if seed:
        order = np.random.RandomState(seed).permutation(len(names))
    names_perm = [names[i] for i in order]
    index = {name: i for i, name in enumerate(names_perm)}

    nvar = len(names_perm)
    c = np.zeros(nvar)
    for name, coef in objective.items():
        c[index[name]] = coef

    lb = np.zeros(nvar)
    ub = np.ones(nvar)
    integrality = np.zeros(nvar)
    for i, name in enumerate(names_perm):
        if name in binaries:
            integrality[i] = 1
            lb[i], ub[i] = 0.0, 1.0
        elif name in bounds_map:
            lb[i], ub[i] = bounds_map[name]
        else:
            lb[i], ub[i] = 0.0, INF

    con_order = np.arange(len(constraints))
    if seed:
        con_order = np.random.RandomState(seed + 1).permutation(
            len(constraints))
    rows, cols, vals = [], [], []
    con_lb, con_ub = [], []
    for r, ci in enumerate(con_order):
        terms, sense, rhs = constraints[ci]
        for name, coef in terms:
            rows.append(r)
            cols.append(index[name])
            vals.append(coef)
        if sense == "<=":
            con_lb.append(-INF)
            con_ub.append(rhs)
        elif sense == ">=":
            con_lb.append(rhs)
            con_ub.append(INF)
        else:
            con_lb.append(rhs)
            con_ub.append(rhs)

    a_matrix = sparse.csr_matrix((vals, (rows, cols)),
                                 shape=(len(constraints), nvar))

    options = {"time_limit": time_limit, "mip_rel_gap": mip_gap}
    t0 = time.time()
    res = milp(c=c, constraints=LinearConstraint(a_matrix, con_lb, con_ub),
               integrality=integrality, bounds=Bounds(lb, ub),
               options=options)
    runtime = time.time() - t0

    nodes = getattr(res, "mip_node_count", None)
    out = {
        "backend": "scipy-highs",
        "runtime_s": runtime,
        "seed": seed,
        "nodes": int(nodes) if nodes is not None else -1,
    }
    dual = getattr(res, "mip_dual_bound", None)
    if dual is not None and np.isfinite(dual):
        out["dual_bound"] = float(dual)

    if res.status == 0:
        out["status"] = "OPTIMAL"
    elif res.status == 1:
        out["status"] = "TIME_LIMIT"
    elif res.status == 2:
        out["status"] = "INFEASIBLE"
    else:
        out["status"] = "ERROR"
        out["message"] = str(res.message)

    if out["status"] == "OPTIMAL" and res.x is not None:
        out["objective"] = float(res.fun)
        out["values"] = {name: float(res.x[index[name]]) for name in names}
    return out


def solve_one(lp_path, time_limit, mip_gap, seed, engine="auto"):
    if engine in ("auto", "highs"):
        try:
            return solve_with_highs(lp_path, time_limit, mip_gap, seed)
        except (ImportError, AttributeError):
            if engine == "highs":
                raise
    return solve_with_scipy(lp_path, time_limit, mip_gap, seed)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lp")
    ap.add_argument("--out")
    ap.add_argument("--batch")
    ap.add_argument("--time-limit", type=float, default=3600.0)
    ap.add_argument("--mip-gap", type=float, default=0.0)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--engine", default="auto",
                    choices=["auto", "highs", "scipy"])
    args = ap.parse_args()

    if args.batch:
        with open(args.batch) as f:
            jobs = json.load(f)
        for job in jobs:
            result = solve_one(
                job["lp"],
                job.get("time_limit", 3600.0),
                job.get("mip_gap", 0.0),
                int(job.get("seed", 0)),
                args.engine,
            )
            with open(job["out"], "w") as f:
                json.dump(result, f)
        return 0

    if not args.lp or not args.out:
        ap.error("either --batch or both --lp and --out are required")
    result = solve_one(args.lp, args.time_limit, args.mip_gap, args.seed,
                       args.engine)
    with open(args.out, "w") as f:
        json.dump(result, f)
    return 0


if __name__ == "__main__":
    sys.exit(main())
