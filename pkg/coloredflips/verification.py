# -*- coding: utf-8 -*-
"""
author: UnicornOnAzur

Verification suites: every property of the flip graph, the arc permutation
actions, the chamber graph and the tableaux is checked exhaustively for a
given polygon size and collected in a VerificationReport. A check passes when
no counterexample is found; otherwise the first counterexample is kept.

Suites:
- actions: cardinalities, the codec, the Coxeter relations of the three
  actions, transitivity and the bijection f.
- diameter: diameter, antipodes, orientation and degrees of the flip graph.
- isomorphism: the flip graph against the chamber graph of the classes.
- geodesics: counting, enumeration and the diagonal multiset of geodesics.
- tableaux: geodesics against standard tableaux and linear extensions.
"""
# Standard library
import dataclasses
import enum
import itertools
import json
import logging
import timeit
import typing
# Third party
import networkx as nx
import pandas as pd
# Local imports
from coloredflips import actions
from coloredflips import arcperm
from coloredflips import arrangement
from coloredflips import codec
from coloredflips import flipgraph
from coloredflips import polygon
from coloredflips import tableaux
# Constants
BRUTE_FORCE_MAX: int = 8
RHO_MAX: int = 6
THETA_RELATIONS_MAX: int = 7
THETA_ORACLE_MAX: int = 8
GEODESIC_LISTING_MAX: int = 8
ALL_STARTS_MAX: int = 7
TABLEAU_LISTING_MAX: int = 7
logger: logging.Logger = logging.getLogger(__name__)


class Suite(str, enum.Enum):
    ALL = "all"
    ACTIONS = "actions"
    DIAMETER = "diameter"
    ISOMORPHISM = "isomorphism"
    GEODESICS = "geodesics"
    TABLEAUX = "tableaux"


@dataclasses.dataclass(frozen=True)
class Check:
    name: str
    reference: str
    passed: bool
    counterexample: str = ""


@dataclasses.dataclass
class VerificationReport:
    suite: Suite
    n: int
    checks: typing.List[Check] = dataclasses.field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        """True iff every check passed."""
        return all(check.passed for check in self.checks)

    def to_frame(self) -> pd.DataFrame:
        """One row per check: check, reference, result and counterexample."""
        return pd.DataFrame(
            [{"check": check.name,
              "reference": check.reference,
              "result": "pass" if check.passed else "FAIL",
              "counterexample": check.counterexample}
             for check in self.checks],
            columns=["check", "reference", "result", "counterexample"])

    def to_markdown(self) -> str:
        """The report as a table; the elapsed time is logged, not printed."""
        outcome: str = "PASS" if self.passed else "FAIL"
        return (f"suite: {self.suite.value}, n = {self.n}: {outcome}\n\n"
                f"{self.to_frame().to_markdown(index=False)}")

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """The report without its elapsed time, for JSON output."""
        return {"suite": self.suite.value,
                "n": self.n,
                "passed": self.passed,
                "checks": self.to_frame().to_dict(orient="records")}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def _check(name: str, reference: str,
           failures: typing.Iterable[typing.Any]) -> Check:
    """A check passing iff the iterable of counterexamples is empty."""
    first = next(iter(failures), None)
    if first is None:
        return Check(name, reference, True)
    logger.info(f"{name} failed on {first}.")
    return Check(name, reference, False, str(first))


def _unless(condition: bool, counterexample: typing.Any
            ) -> typing.List[typing.Any]:
    """No counterexample when the condition holds."""
    return [] if condition else [counterexample]


###############################################################################
# actions                                                                     #
###############################################################################
def _flip_checks(n: int) -> typing.List[Check]:
    """The flips against brute force and the relations of affine type C."""
    ctft = sorted(polygon.enumerate_ctft(n), key=codec.encode)
    labels = range(n - 3)
    checks: typing.List[Check] = [
        _check("ctft-cardinality", "orbit of the canonical star",
               _unless(len(ctft) == n * 2 ** (n - 4), len(ctft))),
        _check("short-chords", "two short chords, chord 0 short",
               (t.to_dict() for t in ctft
                if polygon.count_short_chords(n, t.chords) != 2
                or not polygon.is_short(t.chords[0], n))),
        _check("flip-involution", "s_i s_i = 1",
               ((t.to_dict(), i) for t in ctft for i in labels
                if polygon.flip_label(polygon.flip_label(t, i), i) != t)),
    ]
    if n <= BRUTE_FORCE_MAX:
        brute = polygon.brute_force_ctft(n)
        checks.append(_check(
            "ctft-brute-force", "Catalan enumeration, both colorings",
            _unless(brute == frozenset(ctft), len(brute))))
    if n >= 6:
        checks.append(_check(
            "flip-coxeter", "relations of affine type C",
            ((t.to_dict(), w) for t, w in actions.relation_violations(
                polygon.flip_label, ctft, n - 4))))
    return checks


def _codec_checks(n: int) -> typing.List[Check]:
    """The codec against the polygon, s_0 pairing included."""
    ctft = polygon.enumerate_ctft(n)
    mod: int = codec.modulus(n)
    codes = {codec.encode(t): t for t in ctft}
    s0: typing.Dict[str, int] = codec.s0_report(n)
    return [
        _check("codec-bijection", "encode and decode are inverse",
               itertools.chain(
                   _unless(set(codes) == set(codec.all_codes(n)), len(codes)),
                   (str(c) for c, t in codes.items()
                    if codec.decode(c) != t))),
        _check("codec-generators", "closed form of s_i on codes",
               ((str(c), i) for c, t in codes.items() for i in range(n - 3)
                if codec.apply_generator_closed_form(c, i)
                != codec.encode(polygon.flip_label(t, i)))),
        _check("s0-pairing", "v1 = 1 moves v0 to v0 + 1",
               _unless(s0["fitted"] == s0["codes"], s0)),
        _check("codec-reverse", "reversal on codes",
               (str(c) for c, t in codes.items()
                if codec.reverse_code(c) != codec.encode(polygon.reverse(t)))),
        _check("rank-antipode", "rank difference n(n-3)/2",
               (str(c) for c in codes
                if (codec.rank(codec.reverse_code(c)) - codec.rank(c)) % mod
                != mod // 2)),
    ]


def _arc_checks(n: int) -> typing.List[Check]:
    """Relations and transitivity of rho on U_n and of theta on the classes."""
    checks: typing.List[Check] = []
    if n <= RHO_MAX:
        perms = sorted(arcperm.enumerate_arc_perms(n))
        identity = arcperm.ArcPermutation(n, tuple(range(n)))
        orbit = actions.orbit(arcperm.rho, identity, range(n - 1))
        checks += [
            _check("rho-coxeter", "relations of affine type C",
                   actions.relation_violations(arcperm.rho, perms, n - 2)),
            _check("rho-transitive", "orbit of the identity",
                   _unless(orbit == frozenset(perms), len(orbit))),
            _check("rho-restriction", "rho_1 .. rho_{n-2} keep the head",
                   (p.letters for p in perms for i in range(1, n - 1)
                    if arcperm.rho(p, i).letters[0] != p.letters[0])),
        ]
    classes = sorted(arcperm.enumerate_classes(n))
    some_orbit = actions.orbit(arcperm.theta, classes[0], range(n - 3))
    checks.append(_check(
        "theta-transitive", "orbit of a class",
        _unless(len(some_orbit) == len(classes) == n * 2 ** (n - 4),
                len(some_orbit))))
    if 6 <= n <= THETA_RELATIONS_MAX:
        checks.append(_check(
            "theta-coxeter", "relations of affine type C",
            actions.relation_violations(arcperm.theta, classes, n - 4)))
    if n <= THETA_ORACLE_MAX:
        checks.append(_check(
            "theta-representatives", "theta on member permutations",
            ((cl.subsets, i) for cl in classes for i in range(n - 3)
             if arcperm.theta(cl, i)
             != arcperm.theta_by_representatives(cl, i))))
    return checks


def _f_checks(n: int) -> typing.List[Check]:
    """The map f: bijective, intertwining the flips with theta and reversal."""
    ctft = sorted(polygon.enumerate_ctft(n), key=codec.encode)
    images = {t: arcperm.f_map(t) for t in ctft}
    return [
        _check("f-bijection", "f is invertible",
               itertools.chain(
                   _unless(len(set(images.values())) == len(ctft), n),
                   (t.to_dict() for t, cl in images.items()
                    if arcperm.f_inv(cl) != t))),
        _check("f-intertwining", "f(s_i T) = theta_i f(T)",
               ((t.to_dict(), i) for t in ctft for i in range(n - 3)
                if arcperm.f_map(polygon.flip_label(t, i))
                != arcperm.theta(images[t], i))),
        _check("f-reverse", "f(T^R) reverses the subsets",
               (t.to_dict() for t in ctft
                if arcperm.f_map(polygon.reverse(t)).subsets
                != images[t].subsets[::-1])),
    ]


def actions_suite(n: int) -> typing.List[Check]:
    """
    The checks of the flips, rho and theta and of the bijection f.

    Parameters:
        n : The polygon size.

    Returns:
        The checks in a fixed order.
    """
    return _flip_checks(n) + _codec_checks(n) + _arc_checks(n) + _f_checks(n)


###############################################################################
# diameter                                                                    #
###############################################################################
def diameter_suite(n: int) -> typing.List[Check]:
    """
    Diameter, antipodes, rank orientation and degrees of the flip graph.

    Parameters:
        n : The polygon size.

    Returns:
        The checks in a fixed order.
    """
    graph = flipgraph.build(n)
    half: int = n * (n - 3) // 2
    mod: int = codec.modulus(n)
    edges = list(graph.edges())
    diameter: int = flipgraph.diameter(graph)
    return [
        _check("connected", "transitive action",
               _unless(nx.is_connected(graph.nx_graph), n)),
        _check("diameter", "diameter n(n-3)/2",
               _unless(diameter == half, diameter)),
        _check("antipodes", "distance(T, T^R) = n(n-3)/2",
               (str(c) for c in graph.vertices
                if flipgraph.distance(graph, c, codec.reverse_code(c))
                != half)),
        _check("rank-coherence", "every flip moves the rank by +-1",
               ((str(c), str(e.target)) for c in graph.vertices
                for e in graph.adjacency[c]
                if (codec.rank(e.target) - codec.rank(c)) % mod
                not in (1, mod - 1))),
        _check("orientation-cases", "orientation by cases",
               ((str(c), e.generator) for c in graph.vertices
                for e in graph.adjacency[c]
                if flipgraph.orientation_by_cases(c, e.generator)
                != e.ascending)),
        _check("degree", "2 + number of bit changes",
               (str(c) for c in graph.vertices
                if graph.degree(c) != 2 + sum(
                    a != b for a, b in zip(c.bits, c.bits[1:])))),
        _check("edge-diagonal", "erased diagonal is chord_of_label",
               ((str(c), e.generator) for c, e in edges
                if e.erased != codec.chord_of_label(c, e.generator))),
    ]


###############################################################################
# isomorphism                                                                 #
###############################################################################
def isomorphism_suite(n: int) -> typing.List[Check]:
    """
    The flip graph against the chamber graph of the classes of arc
    permutations, with the negative chamber of the reverse.

    Parameters:
        n : The polygon size.

    Returns:
        The checks in a fixed order.
    """
    ctft = sorted(polygon.enumerate_ctft(n), key=codec.encode)
    classes = sorted(arcperm.enumerate_classes(n))
    chambers = [arrangement.class_chamber(cl) for cl in classes]
    checks: typing.List[Check] = [
        _check("isomorphism", "flip graph and chamber graph",
               flipgraph.isomorphism_mismatches(n)),
        _check("class-chambers", "members share a chamber",
               (cl.subsets for cl in classes
                if len({arrangement.chamber_of(
                    m.letters, arrangement.k_prime_arrangement(n)).signs
                    for m in arcperm.members(cl)}) != 1)),
        _check("class-injective", "distinct classes, distinct chambers",
               _unless(len(set(chambers)) == len(classes), len(classes))),
        _check("negative-chamber", "chamber of f(T^R) is the negative",
               (t.to_dict() for t in ctft
                if arrangement.class_chamber(arcperm.f_map(polygon.reverse(t)))
                != arrangement.negative(
                    arrangement.class_chamber(arcperm.f_map(t))))),
    ]
    if n == 5:
        graph = arrangement.classes_chamber_graph(5)
        checks.append(_check(
            "ten-cycle", "the chamber graph for n = 5 is a 10-cycle",
            _unless(nx.is_isomorphic(graph, nx.cycle_graph(10)),
                    graph.number_of_edges())))
    return checks


###############################################################################
# geodesics                                                                   #
###############################################################################
def _expected_geodesics(n: int) -> int:
    """d_n by the closed formula; the pentagon has two geodesics."""
    return tableaux.d_formula(n) if n >= 6 else 2


def geodesics_suite(n: int) -> typing.List[Check]:
    """
    Counts and diagonal orders of the geodesics from the canonical star
    to its reverse, and from every start for small n.

    Parameters:
        n : The polygon size.

    Returns:
        The checks in a fixed order.
    """
    graph = flipgraph.build(n)
    start = codec.encode(polygon.canonical_star(n))
    end = codec.reverse_code(start)
    plus = flipgraph.count_geodesics(graph, start, end,
                                     flipgraph.Direction.PLUS)
    minus = flipgraph.count_geodesics(graph, start, end,
                                      flipgraph.Direction.MINUS)
    checks: typing.List[Check] = [
        _check("geodesic-count", f"d_n = {_expected_geodesics(n)} geodesics",
               _unless(plus + minus == _expected_geodesics(n), plus + minus)),
        _check("plus-minus", "as many plus as minus geodesics",
               _unless(plus == minus, (plus, minus))),
    ]
    if n > GEODESIC_LISTING_MAX:
        return checks
    paths = list(flipgraph.enumerate_geodesics(graph, start, end))
    last = polygon.Diagonal(n - 3, n - 1)
    logger.info(f"{len(paths)} geodesics listed for n={n}.")
    checks += [
        _check("enumeration-count", "listing agrees with counting",
               _unless(len(paths) == plus + minus, len(paths))),
        _check("diagonals-once", "every diagonal flipped exactly once",
               (p.to_dict() for p in paths
                if not flipgraph.verify_diagonal_multiset(p))),
        _check("plus-boundary", "plus geodesics flip [0,2] first, [n-3,n-1]"
               " last",
               (p.to_dict() for p in paths
                if p.direction is flipgraph.Direction.PLUS
                and (p.diagonals[0] != polygon.Diagonal(0, 2)
                     or p.diagonals[-1] != last))),
    ]
    if n <= ALL_STARTS_MAX:
        checks.append(_check(
            "diagonals-once-all-starts", "every T, every geodesic to T^R",
            (p.to_dict() for c in graph.vertices
             for p in flipgraph.enumerate_geodesics(
                 graph, c, codec.reverse_code(c))
             if not flipgraph.verify_diagonal_multiset(p))))
    if n <= flipgraph.ORACLE_MAX:
        generic = {p.diagonals for p in flipgraph.all_shortest_paths(
            graph, start, end)}
        checks.append(_check(
            "generic-shortest-paths", "unoriented shortest paths",
            _unless(generic == {p.diagonals for p in paths}, len(generic))))
    return checks


###############################################################################
# tableaux                                                                    #
###############################################################################
def tableaux_suite(n: int) -> typing.List[Check]:
    """
    Standard tableaux against plus and minus geodesics, the diagonal
    poset and the partitions of Lambda(n-3).

    Parameters:
        n : The polygon size.

    Returns:
        The checks in a fixed order.
    """
    p: int = n - 3
    shape = tableaux.make_shape(p)
    count: int = tableaux.count_syt(shape)
    report = tableaux.lambda_report(p)
    checks: typing.List[Check] = [
        _check("syt-count", "d_n is twice the tableau count",
               _unless(2 * count == _expected_geodesics(n), count)),
        _check("diagonal-poset", "tableaux count the linear extensions",
               _unless(tableaux.diagonal_poset(n).count_linear_extensions()
                       == count, n)),
        _check("lambda-chains", "maximal chains of Lambda(n-3)",
               _unless(report["maximal_chains"] == count, report)),
        _check("lambda-extensions", "pairs (i, j) with 0 <= i+1 < j <= n-1",
               _unless(tableaux.lambda_extension_count(n - 1) == count, n)),
    ]
    if n > TABLEAU_LISTING_MAX:
        return checks
    graph = flipgraph.build(n)
    start = codec.encode(polygon.canonical_star(n))
    end = codec.reverse_code(start)
    plus = [list(path.diagonals) for path in flipgraph.enumerate_geodesics(
        graph, start, end, flipgraph.Direction.PLUS)]
    minus = [list(path.diagonals) for path in flipgraph.enumerate_geodesics(
        graph, start, end, flipgraph.Direction.MINUS)]
    syt = tableaux.enumerate_syt(shape)
    natural = tableaux.diagonal_poset(n)
    reverse = tableaux.diagonal_poset(n, reverse=True)
    from_tableaux = sorted(tableaux.tableau_to_geodesic(t, n) for t in syt)
    checks += [
        _check("syt-listing", "listing agrees with counting",
               _unless(len(syt) == count, len(syt))),
        _check("plus-extensions", "plus geodesics are the linear extensions",
               itertools.chain(
                   (seq for seq in plus
                    if not tableaux.is_linear_extension(natural, seq)),
                   _unless(sorted(plus) == from_tableaux, len(plus)))),
        _check("minus-extensions", "minus geodesics extend the reverse order",
               itertools.chain(
                   (seq for seq in minus
                    if not tableaux.is_linear_extension(reverse, seq)),
                   _unless(sorted(minus) == sorted(
                       tableaux.reflect(seq, n) for seq in plus),
                       len(minus)))),
        _check("tableau-round-trip", "geodesics and tableaux",
               (t.rows for t in syt
                if tableaux.geodesic_to_tableau(
                    tableaux.tableau_to_geodesic(t, n)) != t)),
    ]
    return checks


SUITES: typing.Dict[Suite, typing.Callable[[int], typing.List[Check]]] = {
    Suite.ACTIONS: actions_suite,
    Suite.DIAMETER: diameter_suite,
    Suite.ISOMORPHISM: isomorphism_suite,
    Suite.GEODESICS: geodesics_suite,
    Suite.TABLEAUX: tableaux_suite,
}


def run_suite(suite: Suite, n: int) -> VerificationReport:
    """
    Run one suite, or every suite for Suite.ALL, for the n-gon.

    Parameters:
        suite : The suite to run.
        n : The polygon size.

    Returns:
        The report with one row per check.
    """
    suite = Suite(suite)
    polygon.check_size(n)
    started: float = timeit.default_timer()
    selected = list(SUITES) if suite is Suite.ALL else [suite]
    checks: typing.List[Check] = []
    for name in selected:
        checks += SUITES[name](n)
    report = VerificationReport(suite, n, checks,
                                timeit.default_timer() - started)
    logger.info(f"Suite {suite.value} for n={n}:"
                f" {'pass' if report.passed else 'FAIL'} in"
                f" {report.elapsed:.2f}s.")
    return report
