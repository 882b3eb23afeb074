"""Falsification harness: seeded corpora and checks against the exact solver.

Every check records how many instances met its hypothesis, how many passed
or failed, and how many were skipped because a resource cap was hit.
Skipped instances never count as passed.  Failures carry the witness graph,
the parameters, both sides of the violated relation and a greedily
minimised witness.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import networkx as nx

from .engine import play
from .errors import CopsRobbersError, InstanceTooLargeError
from .graph import (
    DESK_CAP,
    INF,
    Graph,
    circumference,
    claw,
    complete,
    complete_bipartite,
    contains_forest_subgraph,
    cycle,
    disjoint_union,
    girth,
    gnp,
    has_induced_cycle_at_least,
    is_p_free,
    path,
    petersen,
    render_graph,
    spider,
    star,
)
from .solver import DENSE_CAP, STATE_CAP, OptimalRobber, cop_number, solve_cached
from .strategies import (
    GuardStrategy,
    bipartite_lead_cop,
    induced_cycle_strategy,
    lead_cop_strategy,
    subdivision_plus_one,
    theorem2_strategy,
    tree_decomposition_strategy,
)
from .strategies.treedec import budget_for
from .transforms import clique_substitution, hat_construction, subdivide
from .treewidth import TREEWIDTH_CAP, exact_treewidth

ELLS = range(3, 9)
BIPARTITE_ELLS = range(1, 5)
SUBDIVISIONS = (1, 2, 3)
PATTERNS = {"claw": claw(), "spider-2-2-2": spider(2, 2, 2), "P2+claw": disjoint_union(path(2), claw())}


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 0
    min_n: int = 1
    max_n: int = 10
    exhaustive_max_n: int = 6  # every connected graph up to this order
    gnp_sizes: tuple = (7, 8, 9, 10)
    gnp_ps: tuple = (0.2, 0.4, 0.6)
    gnp_per_cell: int = 2
    named: bool = True
    transform_depth: int = 0  # add clique substitutions / 1-subdivisions of graphs up to 4 vertices
    state_cap: int = STATE_CAP
    dense_cap: int = DENSE_CAP
    treewidth_cap: int = TREEWIDTH_CAP
    desk_cap: int = DESK_CAP

    def instances(self) -> list:
        """``(instance id, graph)`` pairs; a pure function of the spec."""
        out = []
        if self.exhaustive_max_n >= 1:
            for i, h in enumerate(nx.graph_atlas_g()):
                if 1 <= h.number_of_nodes() <= self.exhaustive_max_n and nx.is_connected(h):
                    out.append((f"atlas-{i:04d}", Graph(h.number_of_nodes(), h.edges())))
        for n in self.gnp_sizes:
            for p in self.gnp_ps:
                for j in range(self.gnp_per_cell):
                    seed = self.seed * 100_003 + n * 1000 + int(round(p * 100)) * 10 + j
                    out.append((f"gnp-n{n:02d}-p{p:.2f}-{j}", gnp(n, p, seed)))
        if self.named:
            out += [
                ("named-petersen", petersen()),
                ("named-petersen+K6", disjoint_union(petersen(), complete(6))),
                ("named-K33", complete_bipartite(3, 3)),
                ("named-K15", star(5)),
                ("named-claw", claw()),
                ("named-spider-2-2-2", spider(2, 2, 2)),
            ] + [(f"named-C{n:02d}", cycle(n)) for n in range(3, 11)]
        if self.transform_depth >= 1:
            base = [(name, g) for name, g in out if g.n <= 4 and g.m > 0 and g.is_connected()]
            for name, g in base:
                if min(g.degree(v) for v in g.vertices()) > 0:
                    out.append((f"{name}+clique", clique_substitution(g).output))
                out.append((f"{name}+sub1", subdivide(g, 1).output))
        out = [(name, g) for name, g in out if self.min_n <= g.n <= self.max_n]
        return sorted(out, key=lambda x: x[0])


@dataclass
class Failure:
    instance: str
    graph: list
    params: dict
    relation: str
    lhs: object
    rhs: object
    minimized: list | None = None


@dataclass
class CheckResult:
    name: str
    hypothesis: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def record(self, ok, failure=None):
        """Count one applicable instance; ``failure`` may be a thunk, built only on failure."""
        self.hypothesis += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(failure() if callable(failure) else failure)

    def merge(self, other):
        self.hypothesis += other.hypothesis
        self.passed += other.passed
        self.failed += other.failed
        self.skipped += other.skipped
        self.failures += other.failures
        for k, v in other.notes.items():
            self.notes.setdefault(k, v)


@dataclass
class VerificationReport:
    checks: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks.values())

    def check(self, name) -> CheckResult:
        if name not in self.checks:
            self.checks[name] = CheckResult(name)
        return self.checks[name]

    def merge(self, other: "VerificationReport"):
        for name, c in other.checks.items():
            self.check(name).merge(c)
        return self

    def as_dict(self) -> dict:
        checks = {}
        for name in sorted(self.checks):
            c = asdict(self.checks[name])
            c["failures"] = sorted(c["failures"], key=lambda f: (f["instance"], json.dumps(f["params"], sort_keys=True)))
            checks[name] = c
        return {"ok": self.ok, "checks": checks, "config": self.config}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=1, default=str)

    def to_text(self) -> str:
        rows = [("check", "hypothesis", "passed", "failed", "skipped")]
        for name in sorted(self.checks):
            c = self.checks[name]
            rows.append((name, str(c.hypothesis), str(c.passed), str(c.failed), str(c.skipped)))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = ["  ".join(x.ljust(w) if i == 0 else x.rjust(w) for i, (x, w) in enumerate(zip(r, widths))) for r in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        for name in sorted(self.checks):
            for f in self.checks[name].failures:
                lines.append(f"FAIL {name} {f.instance} {f.params}: {f.lhs} {f.relation} {f.rhs} violated")
                lines.append(f"     witness edges {f.minimized if f.minimized is not None else f.graph}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines) + "\n"


def minimize_witness(g: Graph, still_fails, budget: int = 200) -> Graph:
    """Greedy vertex then edge deletion while ``still_fails`` holds."""
    changed = True
    while changed and budget > 0:
        changed = False
        for v in range(g.n):
            budget -= 1
            h = g.remove_vertices([v])[0] if g.n > 1 else None
            if h is not None and _fails(still_fails, h):
                g, changed = h, True
                break
        if changed:
            continue
        for u, v in g.edges:
            budget -= 1
            h = g.remove_edge(u, v)
            if _fails(still_fails, h):
                g, changed = h, True
                break
    return g


def _fails(pred, h):
    try:
        return bool(pred(h))
    except CopsRobbersError:
        return False


def _failure(name, g, params, relation, lhs, rhs, pred=None):
    mini = None
    if pred is not None:
        mini = list(map(list, minimize_witness(g, pred).edges))
    return Failure(name, list(map(list, g.edges)), params, relation, lhs, rhs, mini)


# -- per-instance work ----------------------------------------------------


def _caps(spec):
    return {"state_cap": spec.state_cap, "dense_cap": spec.dense_cap}


def _bounds_one(spec, name, g):
    rep = VerificationReport()
    caps = _caps(spec)
    try:
        cop = cop_number(g, **caps)
        tw, _ = exact_treewidth(g, spec.treewidth_cap)
    except InstanceTooLargeError:
        for check in ("treewidth-bound", "circumference-bound", "induced-path-bound", "induced-cycle-bound", "bipartite-bound"):
            rep.check(check).skipped += 1
        return rep

    def cop_of(h):
        return cop_number(h, **caps)

    def tw_of(h):
        return exact_treewidth(h, spec.treewidth_cap)[0]

    bound = tw // 2 + 1
    c = rep.check("treewidth-bound")
    c.record(cop <= bound, lambda: _failure(name, g, {}, "<=", cop, bound, lambda h: cop_of(h) > tw_of(h) // 2 + 1))
    if cop == bound:
        c.notes[f"tight-tw{tw}"] = name

    if girth(g) is not INF:
        circ = circumference(g, spec.desk_cap)
        ok = 2 * cop <= circ and tw <= circ - 1

        def circumference_fails(h):
            if girth(h) is INF:
                return False
            ci = circumference(h, spec.desk_cap)
            return 2 * cop_of(h) > ci or tw_of(h) > ci - 1

        rep.check("circumference-bound").record(ok, lambda: _failure(name, g, {"tw": tw}, "cop<=circ/2 and tw<=circ-1", cop, circ, circumference_fails))

    for ell in ELLS:
        bound = max(ell - 2, 1)
        if is_p_free(g, ell, spec.desk_cap):
            rep.check("induced-path-bound").record(
                cop <= bound,
                lambda ell=ell: _failure(name, g, {"l": ell}, "<=", cop, bound, lambda h, e=ell: is_p_free(h, e) and cop_of(h) > max(e - 2, 1)),
            )
        if not has_induced_cycle_at_least(g, ell, spec.desk_cap):
            rep.check("induced-cycle-bound").record(
                cop <= bound,
                lambda ell=ell: _failure(
                    name,
                    g,
                    {"l": ell},
                    "<=",
                    cop,
                    bound,
                    lambda h, e=ell: not has_induced_cycle_at_least(h, e) and cop_of(h) > max(e - 2, 1),
                ),
            )
    if g.is_bipartite():
        for ell in BIPARTITE_ELLS:
            if is_p_free(g, 2 * ell, spec.desk_cap):
                rep.check("bipartite-bound").record(cop <= ell, lambda ell=ell: _failure(name, g, {"l": ell}, "<=", cop, ell))
    return rep


def _monotone_one(spec, name, g, max_n=6, hat_max_n=5):
    rep = VerificationReport()
    if not g.is_connected() or g.n > max_n:
        return rep
    caps = _caps(spec)
    try:
        cop = cop_number(g, **caps)
    except InstanceTooLargeError:
        for check in ("clique-substitution", "subdivision", "hat"):
            rep.check(check).skipped += 1
        return rep
    if g.m > 0:
        try:
            plus = cop_number(clique_substitution(g).output, **caps)
            rep.check("clique-substitution").record(plus >= cop, lambda: _failure(name, g, {}, ">=", plus, cop))
        except InstanceTooLargeError:
            rep.check("clique-substitution").skipped += 1
    for r in SUBDIVISIONS:
        try:
            sub = cop_number(subdivide(g, r).output, **caps)
        except InstanceTooLargeError:
            rep.check("subdivision").skipped += 1
            continue
        rep.check("subdivision").record(cop <= sub <= cop + 1, lambda r=r, sub=sub: _failure(name, g, {"r": r}, "in [cop, cop+1]", sub, cop))
    if cop >= 2 and g.n <= hat_max_n:
        try:
            hat = cop_number(hat_construction(g).output, **caps)
            rep.check("hat").record(hat == cop, lambda: _failure(name, g, {}, "==", hat, cop))
        except InstanceTooLargeError:
            rep.check("hat").skipped += 1
    return rep


def _robber(g, k, spec):
    return OptimalRobber(solve_cached(g, k, spec.state_cap, spec.dense_cap))


def _match(rep, check, name, g, k, make, params, spec, inspect=None, board=None, applicable=None, capture=True):
    """Play ``make()`` with ``k`` cops against the optimal robber and record the result.

    With ``capture=False`` only ``inspect`` decides (invariant-only checks).

    ``applicable(h)`` restates the strategy's hypothesis; when given, a
    failing instance is minimised over graphs that still satisfy it.
    """
    board = board or g

    def problem_on(h):
        strat = make()
        trace = play(h, k, strat, _robber(h, k, spec))
        if capture and not trace.captured:
            return f"outcome {trace.outcome.get('result')}"
        return inspect(strat, trace) if inspect is not None else None

    try:
        _robber(board, k, spec)
    except InstanceTooLargeError:
        rep.check(check).skipped += 1
        return
    problem = problem_on(board)

    def failure():
        pred = None
        if applicable is not None and board is g:
            pred = lambda h: h.is_connected() and applicable(h) and problem_on(h) is not None  # noqa: E731
        return _failure(name, g, dict(params, k=k), "captures", problem, "capture", pred)

    rep.check(check).record(problem is None, failure)


def _stage_problem(ell, progress=True):
    def inspect(strat, trace):
        for s in strat.stages:
            if s.flagged:
                return f"stage by cop {s.lead} hit the safety cap"
            after = s.lead_moves - s.reached_at if s.ended and s.reached_at is not None else 0
            if progress and after > ell - s.distance - 1:
                return f"stage (d={s.distance}) took {after} moves after reaching y"
        return None

    return inspect


def _safe_visits(states, protected_at):
    """First robber arrival on a protected vertex that is not punished at once."""
    for idx, s in enumerate(states):
        if s.side_to_move != "cops" or s.robber is None or s.captured:
            continue
        if s.robber in protected_at(s.round):
            follow = states[idx + 1] if idx + 1 < len(states) else None
            if follow is None or not follow.captured:
                return s
    return None


def _guard_problem(strat, trace):
    """Robber on the guarded path after guarding began, not captured at once."""
    start = next((e["round"] for e in strat.events if e.get("guarding")), None)
    if start is None:
        return "guard never established"
    on = set(strat.path)
    bad = _safe_visits(trace.states(), lambda t: on if t >= start else ())
    return None if bad is None else f"robber safe on guarded vertex {bad.robber} in round {bad.round}"


def _bag_problem(strat, trace):
    """Robber on a protected vertex, not captured at once.

    Protected: the whole current bag once all its guards are in position;
    the kept separator ``B & B'`` while the cops regroup after an advance.
    """
    dec = strat.dec
    protected = {0: set()}
    current = set()
    for e in strat.events:
        if "advance" in e:
            a, b = e["advance"]
            keep = set(dec.bags[a]) & set(dec.bags[b])
            if set(e["territory"]) & keep:
                return f"territory meets the kept separator in round {e['round']}"
            current = keep
        if "established" in e:
            current = set(dec.bags[e["established"]])
        protected[e["round"]] = current
    rounds = sorted(protected)

    def at(t):
        best = set()
        for r in rounds:
            if r > t:
                break
            best = protected[r]
        return best

    bad = _safe_visits(trace.states(), at)
    return None if bad is None else f"robber safe on protected vertex {bad.robber} in round {bad.round}"


def _components(g):
    if g.is_connected():
        return [("", g)]
    return [(f"#c{i}", g.induced_subgraph(part)[0]) for i, part in enumerate(g.components())]


def _strategies_one(spec, name, g0):
    rep = VerificationReport()
    for suffix, g in _components(g0):
        inst = name + suffix
        if g.n > spec.desk_cap:
            for check in ("lead-cop", "induced-cycle", "bipartite-lead-cop", "treedec", "guard", "thm2"):
                rep.check(check).skipped += 1
            continue
        for ell in ELLS:
            k = ell - 2
            if is_p_free(g, ell):
                _match(
                    rep, "lead-cop", inst, g, k, lambda e=ell: lead_cop_strategy(e), {"l": ell}, spec,
                    _stage_problem(ell), applicable=lambda h, e=ell: is_p_free(h, e),
                )
            if not has_induced_cycle_at_least(g, ell):
                _match(
                    rep, "induced-cycle", inst, g, k, lambda e=ell: induced_cycle_strategy(e), {"l": ell}, spec,
                    _stage_problem(ell, progress=False), applicable=lambda h, e=ell: not has_induced_cycle_at_least(h, e),
                )
        if g.is_bipartite():
            for ell in BIPARTITE_ELLS:
                if is_p_free(g, 2 * ell):
                    _match(
                        rep, "bipartite-lead-cop", inst, g, ell, lambda e=ell: bipartite_lead_cop(e), {"l": ell}, spec,
                        applicable=lambda h, e=ell: h.is_bipartite() and is_p_free(h, 2 * e),
                    )
        try:
            tw, dec = exact_treewidth(g, spec.treewidth_cap)
        except InstanceTooLargeError:
            rep.check("treedec").skipped += 1
        else:
            k = tw // 2 + 1
            if budget_for(dec) > k:
                rep.check("treedec-budget").record(False, lambda: Failure(inst, list(map(list, g.edges)), {}, "<=", budget_for(dec), k))
            else:
                rep.check("treedec-budget").record(True)
            _match(rep, "treedec", inst, g, k, lambda d=dec: tree_decomposition_strategy(d), {"tw": tw}, spec, _bag_problem)
        if g.n >= 2:
            far = max(g.vertices(), key=lambda v: (g.distance(0, v), -v))
            guarded = g.shortest_path(0, far)
            _match(rep, "guard", inst, g, 1, lambda p=guarded: GuardStrategy(p), {"path": guarded}, spec, _guard_problem, capture=False)
        for label, h in PATTERNS.items():
            if contains_forest_subgraph(g, h) is None:
                strat = theorem2_strategy(h)
                _match(
                    rep,
                    "thm2",
                    inst,
                    g,
                    strat.budget,
                    lambda hh=h: theorem2_strategy(hh),
                    {"H": label},
                    spec,
                    lambda s, t: next((f"robber escaped at {e['round']}" for e in s.events if isinstance(e, dict) and "escape" in e), None),
                )
    if g0.is_connected() and g0.n <= 6:
        for r in SUBDIVISIONS:
            try:
                strat = subdivision_plus_one(g0, r, spec.state_cap, spec.dense_cap)
            except InstanceTooLargeError:
                rep.check("subdiv+1").skipped += 1
                continue
            _match(rep, "subdiv+1", name, g0, strat.budget, lambda s=strat: _fresh_subdiv(s), {"r": r}, spec, board=strat.graph)
    return rep


def _fresh_subdiv(s):
    return subdivision_plus_one(s.base, s.r)


def _run(spec, fn, threads=1):
    items = spec.instances()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(lambda x: fn(spec, *x), items))
    else:
        parts = [fn(spec, *x) for x in items]
    report = VerificationReport(config={"corpus": asdict(spec), "instances": len(items)})
    for part in parts:  # items are sorted by id, so merging is deterministic
        report.merge(part)
    return report


def check_bounds(spec: CorpusSpec, threads: int = 1) -> VerificationReport:
    return _run(spec, _bounds_one, threads)


def check_transform_monotonicity(spec: CorpusSpec, threads: int = 1) -> VerificationReport:
    return _run(spec, _monotone_one, threads)


def check_strategies(spec: CorpusSpec, threads: int = 1) -> VerificationReport:
    return _run(spec, _strategies_one, threads)


def verify_all(spec: CorpusSpec, threads: int = 1) -> VerificationReport:
    report = VerificationReport(config={"corpus": asdict(spec), "instances": len(spec.instances())})
    for fn in (check_bounds, check_transform_monotonicity, check_strategies):
        report.merge(fn(spec, threads))
    return report


def corpus_listing(spec: CorpusSpec) -> str:
    return "".join(f"# {name}\n{render_graph(g)}" for name, g in spec.instances())
