"""Cross-verification of every chromatic route and corollary on one graph."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .chromatic import (
    CHROMATIC_METHODS,
    WeightMatrix,
    acyclic_orientation_count,
    coloring_count,
    compute,
    q_kostant_at_beta,
    signed_flip,
)
from .errors import InvariantFailure, SizeLimitError
from .lattice import enumerate_lattice, mobius
from .multiplicity import MultTable, edge_weight, edge_weight_lie, path_sums
from .polynomial import Polynomial

EVAL_POINTS = range(0, 6)


@dataclass
class Check:
    ok: bool | None  # None: skipped
    detail: str = ""

    def to_json(self):
        return {"ok": self.ok, "detail": self.detail}


@dataclass
class RunReport:
    graph: object
    lattice_size: int
    polynomials: dict  # method -> Polynomial
    kostant: Polynomial
    timings_ms: dict
    checks: dict = field(default_factory=dict)
    disagreement: dict | None = None

    @property
    def agreement(self):
        return self.disagreement is None

    @property
    def ok(self):
        return self.agreement and all(c.ok is not False for c in self.checks.values())

    def to_json(self, timings=False):
        G = self.graph
        out = {
            "graph": {
                "l": G.l,
                "edges": G.num_edges(),
                "connected": G.connected(),
                "edge_list": G.to_text(),
            },
            "lattice_size": self.lattice_size,
            "methods": {m: p.to_json() for m, p in self.polynomials.items()},
            "kostant": self.kostant.to_json(),
            "agreement": self.agreement,
            "disagreement": self.disagreement,
            "checks": {k: c.to_json() for k, c in self.checks.items()},
            "ok": self.ok,
        }
        if timings:
            out["timings_ms"] = {k: round(v, 3) for k, v in self.timings_ms.items()}
        return out


def first_disagreement(polys: dict):
    """Locate the first method differing from the first one, and the lowest such degree."""
    names = list(polys)
    ref = names[0]
    for other in names[1:]:
        a, b = polys[ref], polys[other]
        if a != b:
            for k in range(max(a.degree, b.degree) + 1):
                if a.coeff(k) != b.coeff(k):
                    return {
                        "methods": [ref, other],
                        "degree": k,
                        "values": [str(a.coeff(k)), str(b.coeff(k))],
                    }
    return None


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, (time.perf_counter() - t0) * 1000.0


def run_verification(G, *, max_lattice=None, max_vertices=None) -> RunReport:
    lat, t_lat = _timed(lambda: enumerate_lattice(G, max_lattice=max_lattice, max_vertices=max_vertices))
    table = MultTable(G)
    polys, timings = {}, {"lattice": t_lat}
    failures = {}
    for m in CHROMATIC_METHODS:
        try:
            polys[m], timings[m] = _timed(lambda: compute(G, m, lat=lat, table=table))
        except InvariantFailure as exc:
            failures[m] = str(exc)
    kostant, timings["kostant"] = _timed(lambda: q_kostant_at_beta(G, lat=lat, table=table))

    disagreement = first_disagreement(polys)
    if failures and disagreement is None:
        m, msg = next(iter(failures.items()))
        disagreement = {"methods": [m], "degree": None, "values": [msg]}

    report = RunReport(G, len(lat), polys, kostant, timings, disagreement=disagreement)
    P = polys.get("bond-lattice") or next(iter(polys.values()), Polynomial())
    report.checks = _checks(G, lat, table, P, kostant)
    return report


def _checks(G, lat, table, P, kostant):
    checks = {}
    l = G.l

    shape = (
        P.is_monic() and P.degree == l and P.coeff(0) == 0 and P.alternates_in_sign()
        and all(c >= 0 for c in kostant.coeffs)
    )
    checks["shape"] = Check(shape, "monic, degree l, zero constant, alternating; K(beta; q) non-negative")

    f = path_sums(lat)
    integral = all(x.denominator == 1 for x in f)
    checks["path_sum_integrality"] = Check(integral, f"{len(f)} lattice elements")
    mults = [table.mult_partition(pi) for pi in lat]
    checks["path_sum_equals_mult"] = Check(all(a == b for a, b in zip(f, mults)), "")

    mu = mobius(lat)
    checks["mobius_equals_signed_mult"] = Check(
        all(mu[pi] == (-1) ** (l - len(pi)) * m for pi, m in zip(lat, mults)), ""
    )

    checks["kostant_sign_flip"] = Check(kostant == signed_flip(P, l), "K(beta; q) = (-1)^l P(-q)")

    weights_ok = True
    for i, pi in enumerate(lat.elements):
        for c in lat.covers[i]:
            w = edge_weight(G, pi, (c.a, c.b))
            if w != edge_weight_lie(G, pi, (c.a, c.b)):
                weights_ok = False
            if not (0 < w <= 1) or ((w == 1) != (c.target == len(lat) - 1)):
                weights_ok = False
    checks["edge_weights"] = Check(weights_ok, "0 < w <= 1, w = 1 iff cover lands on 0^, Lie form agrees")

    W = WeightMatrix.from_lattice(lat)
    diag = W.diagonal()
    expected = [Polynomial()] * (len(lat) - 1) + [Polynomial.q()]
    checks["weight_matrix"] = Check(W.is_upper_triangular() and diag == expected, f"order {W.order}")

    try:
        evals = all(P(q) == coloring_count(G, q) for q in EVAL_POINTS)
        checks["coloring_evaluation"] = Check(evals, "q = 0..5")
    except SizeLimitError as exc:
        checks["coloring_evaluation"] = Check(None, f"skipped: {exc}")

    try:
        acyc = acyclic_orientation_count(G)
        checks["acyclic_orientations"] = Check(acyc == kostant(1), f"{acyc} acyclic orientations")
    except SizeLimitError as exc:
        checks["acyclic_orientations"] = Check(None, f"skipped: {exc}")

    if G.connected():
        m = table.mult_root(G.full)
        checks["coxeter_classes"] = Check(m == kostant.coeff(1), f"mult beta(Pi) = {m}")
    else:
        checks["coxeter_classes"] = Check(None, "skipped: graph is disconnected")
    return checks
