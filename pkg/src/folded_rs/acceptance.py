"""Exit-criteria suite, shared by ``folded-rs verify`` and tests/test_acceptance.py.

Each ``criterion_*`` function runs one check at full size and returns a
:class:`CriterionResult`; none of them raise on failure.
"""

from __future__ import annotations

import contextlib
import io
import tempfile
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import decoder
from .bounds import Comparison, frs_affine_bound, generic_list_bound, johnson_compare
from .field import make_field
from .frs import FrsParams, canonical_params, corrupt, distance, encode, make_params, random_message, random_word
from .oracle import adversarial_center, brute_force_list, code_distance, subspace_ball_intersection
from .poly import Poly, linear_combination
from .subspace import AffineSubspace, affine_hull
from .wronskian import coefficient_rank, folded_wronskian, rank_profile


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:>2} {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(number, name, fn):
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported not raised
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - t0)


def _random_nonzero(params: FrsParams, rng) -> Poly:
    while True:
        p = random_message(params, rng)
        if not p.is_zero():
            return p


def _random_subspace(params: FrsParams, d: int, rng) -> AffineSubspace:
    while True:
        basis = [_random_nonzero(params, rng) for _ in range(d)]
        H = AffineSubspace(params, random_message(params, rng), tuple(basis))
        if H.is_independent():
            return H


def _received_words(params: FrsParams, count: int, seed: int):
    """Uniform words, corrupted codewords and two-codeword splits, interleaved."""
    rng = np.random.default_rng(seed)
    for t in range(count):
        kind = t % 3
        if kind == 0:
            yield random_word(params, rng)
        elif kind == 1:
            c = encode(params, random_message(params, rng))
            yield corrupt(params, c, int(rng.integers(0, params.N + 1)), int(rng.integers(2 ** 32)))
        else:
            targets = [random_message(params, rng) for _ in range(2)]
            yield adversarial_center(affine_hull(params, targets), targets, int(rng.integers(2 ** 32)))


# -- criterion 1 / 2 ---------------------------------------------------------

_canonical_runs: dict = {}


def _canonical_decoding(trials: int = 1000, seed: int = 2024):
    key = (trials, seed)
    if key not in _canonical_runs:
        P = canonical_params()
        mismatches = {1: 0, 2: 0}
        max_list = {1: 0, 2: 0}
        words = list(_received_words(P, trials, seed))
        for k in (1, 2):
            for g in words:
                out = decoder.decode(P, k, g)
                orc = brute_force_list(P, g, out.radius)
                if list(orc.members) != out.list:
                    mismatches[k] += 1
                max_list[k] = max(max_list[k], len(out.list))
        _canonical_runs[key] = (mismatches, max_list)
    return _canonical_runs[key]


def criterion_1_oracle_equivalence(trials: int = 1000, seed: int = 2024) -> CriterionResult:
    def run():
        mismatches, max_list = _canonical_decoding(trials, seed)
        ok = mismatches[1] == 0 and mismatches[2] == 0
        return ok, f"{trials} words x k in {{1,2}}: mismatches k=1:{mismatches[1]} k=2:{mismatches[2]}"
    return _timed(1, "oracle equivalence", run)


def _witness(params: FrsParams, seed: int, radius=None):
    rng = np.random.default_rng(seed)
    f1 = random_message(params, rng)
    f2 = f1 + _random_nonzero(params, rng)
    H = affine_hull(params, [f1, f2])
    g = adversarial_center(H, [f1, f2], seed)
    out = decoder.decode(params, 2, g, radius=radius)
    orc = brute_force_list(params, g, out.radius)
    expected = sorted([f1, f2], key=lambda p: p.padded(params.msg_len))
    return out, orc, expected, (distance(encode(params, f1), g), distance(encode(params, f2), g))


def criterion_2_list_bound(trials: int = 1000, seed: int = 2024) -> CriterionResult:
    def run():
        _, max_list = _canonical_decoding(trials, seed)
        bound_ok = max_list[2] <= 2
        # q=19, m=3, n=18, msg_len=2: two codewords at distance 1/2 < 5/9
        P19 = make_params(19, 3, 18, 2)
        out, orc, expected, dists = _witness(P19, seed)
        strict_ok = (out.radius == Fraction(5, 9) and out.list == expected
                     and list(orc.members) == expected)
        # canonical instance: both targets sit at distance exactly 1/2, the
        # decoding radius itself, so they appear only once the ball is closed
        Pc = canonical_params()
        open_out, _, _, cdists = _witness(Pc, seed)
        closed_out, corc, cexpected, _ = _witness(Pc, seed, radius=Fraction(5, 8))
        boundary_ok = (cdists == (Fraction(1, 2),) * 2 and len(open_out.list) == 0
                       and closed_out.list == cexpected and list(corc.members) == cexpected
                       and closed_out.stats["complete"])
        ok = bound_ok and strict_ok and boundary_ok
        return ok, (f"canonical k=2 max list {max_list[2]} <= 2; strict witness q=19 radius 5/9 "
                    f"list {len(out.list)}; canonical boundary witness at distance 1/2 list "
                    f"{len(closed_out.list)} (closed ball)")
    return _timed(2, "list size bound", run)


# -- criterion 3 / 4 ---------------------------------------------------------

_LINE_CODES = (
    (13, 3, 12, 2),  # canonical, distance 1
    (13, 3, 12, 4),  # distance 3/4
    (13, 1, 12, 3),  # unfolded RS, distance 5/6
)


def _distances(codes):
    out = []
    for q, m, n, L in codes:
        P = make_params(q, m, n, L, gamma=2)
        out.append((P, code_distance(P)))
    return out


def _stress_center(H: AffineSubspace, rng, how_many: int):
    """Alternately a uniform word or a round-robin split among points of H."""
    P = H.params
    if rng.integers(2) == 0:
        return random_word(P, rng)
    pts = {H.point(tuple(rng.integers(0, P.q, size=H.dim).tolist())) for _ in range(how_many)}
    pts = sorted(pts, key=lambda p: p.padded(P.msg_len))[:P.N]
    return adversarial_center(H, pts, int(rng.integers(2 ** 32)))


def criterion_3_line_intersections(trials: int = 1000, seed: int = 3) -> CriterionResult:
    def run():
        rng = np.random.default_rng(seed)
        codes = _distances(_LINE_CODES)
        worst = {1: 0, 2: 0, 3: 0}
        bad = 0
        for t in range(trials):
            P, delta = codes[t % len(codes)]
            H = _random_subspace(P, 1, rng)
            g = _stress_center(H, rng, int(rng.integers(1, 5)))
            for k in (1, 2, 3):
                size = len(subspace_ball_intersection(H, g, Fraction(k, k + 1) * delta))
                worst[k] = max(worst[k], size)
                bad += size > k
        return bad == 0, f"{trials} lines, max |line ∩ ball| by k: {worst}"
    return _timed(3, "line intersections", run)


_PLANE_CODES = (
    (13, 3, 12, 4),
    (13, 1, 12, 3),
)


def criterion_4_plane_intersections(trials: int = 400, seed: int = 4) -> CriterionResult:
    def run():
        rng = np.random.default_rng(seed)
        codes = _distances(_PLANE_CODES)
        worst = {2: 0, 3: 0}
        bad = 0
        for t in range(trials):
            P, delta = codes[t % len(codes)]
            H = _random_subspace(P, 2, rng)
            g = _stress_center(H, rng, int(rng.integers(2, 7)))
            for k in (2, 3):
                size = len(subspace_ball_intersection(H, g, Fraction(k, k + 1) * delta))
                worst[k] = max(worst[k], size)
                bad += size > generic_list_bound(k, 2)
        return bad == 0, f"{trials} planes, max intersection by k: {worst} (bounds 6, 12)"
    return _timed(4, "plane intersections", run)


# -- criterion 5 / 6 ---------------------------------------------------------

def criterion_5_wronskian_independence(trials: int = 200, seed: int = 5) -> CriterionResult:
    def run():
        F = make_field(13, 12)
        L = 6
        rng = np.random.default_rng(seed)
        disagreements = 0
        independent_seen = dependent_seen = 0
        for t in range(trials):
            d = 1 + t % 3
            dependent = bool(t % 2)
            if dependent:
                base = [Poly(F, rng.integers(0, 13, size=L).tolist()) for _ in range(d - 1)]
                coeffs = rng.integers(0, 13, size=d - 1).tolist()
                polys = base + [linear_combination(F, base, coeffs)]
                rng.shuffle(polys)
            else:
                degs = sorted(rng.choice(L, size=d, replace=False).tolist())
                tri = [Poly(F, rng.integers(0, 13, size=e).tolist() + [int(rng.integers(1, 13))]) for e in degs]
                while True:
                    mix = rng.integers(0, 13, size=(d, d))
                    if coefficient_rank([Poly(F, r.tolist()) for r in mix], F) == d:
                        break
                polys = [linear_combination(F, tri, row.tolist()) for row in mix]
            nonzero = not folded_wronskian(polys, F).is_zero()
            full_rank = coefficient_rank(polys, F) == d
            if nonzero != full_rank or full_rank == dependent:
                disagreements += 1
            independent_seen += full_rank
            dependent_seen += not full_rank
        return disagreements == 0, (f"{trials} sets: {independent_seen} independent, "
                                    f"{dependent_seen} dependent, {disagreements} disagreements")
    return _timed(5, "Wronskian independence test", run)


def _root_loaded(P: FrsParams, rng, count: int | None = None) -> Poly:
    """A message polynomial with ``count`` roots among the evaluation points (default msg_len - 1)."""
    F = P.field
    count = P.msg_len - 1 if count is None else count
    roots = rng.choice(P.n, size=count, replace=False).tolist()
    if rng.integers(2):
        # consecutive exponents cover whole folded symbols where possible
        start = int(rng.integers(P.N)) * P.m
        roots = [(start + j) % P.n for j in range(count)]
    p = Poly.constant(F, int(rng.integers(1, P.q)))
    for e in roots:
        p = p * Poly(F, (-F.gamma_pow(int(e)), 1))
    return p


def criterion_6_rank_deficit(trials: int = 200, seed: int = 6) -> CriterionResult:
    def run():
        rng = np.random.default_rng(seed)
        violations = 0
        worst = Fraction(0)
        for t in range(trials):
            P = make_params(73, 4, 24, (3, 6)[t % 2])
            d = 1 + (t // 2) % 2
            while True:
                basis = tuple(_root_loaded(P, rng) if t % 4 >= 2 else _random_nonzero(P, rng)
                              for _ in range(d))
                if d == 2 and t % 8 >= 6:
                    shared = _root_loaded(P, rng, P.msg_len - 2)
                    basis = (shared, shared * Poly.x(P.field))
                H = AffineSubspace(P, random_message(P, rng), basis)
                if H.is_independent():
                    break
            prof = rank_profile(H, check=False)
            violations += prof.deficit_sum > prof.bound
            if prof.deficit_sum:
                worst = max(worst, Fraction(prof.deficit_sum) / prof.bound)
        return violations == 0, f"{trials} subspaces, {violations} violations, max deficit/bound {worst}"
    return _timed(6, "rank deficit bound", run)


# -- criterion 7 / 8 ---------------------------------------------------------

def criterion_7_unique_decoding(trials: int = 500, seed: int = 7) -> CriterionResult:
    def run():
        instances = [canonical_params(), make_params(37, 2, 36, 6)]
        rng = np.random.default_rng(seed)
        failures = 0
        counts = []
        for t in range(trials):
            P = instances[t % 2]
            # all e with e/N < (1-R)/2
            emax = -(-P.N * (1 - P.rate) // 2) - 1
            e = (t // 2) % (emax + 1)
            f = random_message(P, rng)
            g = corrupt(P, encode(P, f), e, int(rng.integers(2 ** 32)))
            out = decoder.decode(P, 1, g)
            failures += out.list != [f]
            counts.append((P.q, e))
        covered = sorted(set(counts))
        return failures == 0, f"{trials} trials, {failures} failures, (q, e) covered: {covered}"
    return _timed(7, "unique decoding roundtrip", run)


_PRUNE_CODES = (
    (13, 3, 12, 2),
    (13, 3, 12, 4),
    (19, 3, 18, 3),
)


def _prune_triple(rng, d: int):
    q, m, n, L = _PRUNE_CODES[int(rng.integers(len(_PRUNE_CODES)))]
    P = make_params(q, m, n, L)
    if rng.integers(3) == 0 and d < L:
        basis = [_root_loaded(P, rng)]
        while len(basis) < d:
            basis.append(_random_nonzero(P, rng))
        H = AffineSubspace(P, random_message(P, rng), tuple(basis))
        if not H.is_independent():
            H = _random_subspace(P, d, rng)
    else:
        H = _random_subspace(P, d, rng)
    kind = int(rng.integers(3))
    if kind == 0:
        g = random_word(P, rng)
    elif kind == 1:
        f = H.point(tuple(rng.integers(0, P.q, size=d).tolist()))
        g = corrupt(P, encode(P, f), int(rng.integers(0, P.N + 1)), int(rng.integers(2 ** 32)))
    else:
        g = _stress_center(H, rng, int(rng.integers(2, 5)))
    radius = Fraction(int(rng.integers(1, 2 * P.N + 1)), 2 * P.N)
    return H, g, radius


def criterion_8_pruning_equivalence(trials: int = 1000, seed: int = 8) -> CriterionResult:
    def run():
        rng = np.random.default_rng(seed)
        freq_bad = pin_bad = 0
        nonempty = 0
        for _ in range(trials):
            H, g, radius = _prune_triple(rng, 1)
            ref = decoder.prune_exhaustive(H, g, radius)
            nonempty += bool(ref)
            freq_bad += decoder.prune_dim1_frequency(H, g, radius) != ref
        for t in range(trials):
            H, g, radius = _prune_triple(rng, 1 + t % 2)
            ref = decoder.prune_exhaustive(H, g, radius)
            pin_bad += decoder.prune_pinning(H, g, radius) != ref
        return freq_bad == 0 and pin_bad == 0, (
            f"{trials} line triples (frequency) + {trials} triples d in {{1,2}} (pinning): "
            f"mismatches {freq_bad}/{pin_bad}, {nonempty} nonempty line lists")
    return _timed(8, "pruning equivalence", run)


# -- criterion 9 / 10 --------------------------------------------------------

def _cli(argv: list[str]) -> tuple[int, str]:
    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def criterion_9_bounds_table() -> CriterionResult:
    def run():
        def field_of(text, name):
            for line in text.splitlines():
                parts = line.split()
                if parts and parts[0] == name:
                    return parts[1]
            return None

        c8, out8 = _cli(["bounds", "--k", "8"])
        c2, out2 = _cli(["bounds", "--k", "2", "--m", "3", "--R", "1/6"])
        checks = [
            c8 == 0 and field_of(out8, "frs_list_bound") == "50",
            c2 == 0 and field_of(out2, "frs_list_bound") == "2" and field_of(out2, "radius") == "1/2",
            frs_affine_bound(2, 1) == 2,
        ]
        for k in (2, 3, 4, 8):
            code, out = _cli(["bounds", "--k", str(k), "--m", str(k), "--R", f"1/{k * k}"])
            checks.append(code == 0 and field_of(out, "johnson") == "equal")
            checks.append(johnson_compare(k, Fraction(1, k * k)) is Comparison.EQUAL)
        return all(checks), f"k=8 -> 50, k=2 -> 2 at radius 1/2, Johnson equality at R=1/k^2: {sum(checks)}/{len(checks)} checks"
    return _timed(9, "bounds table", run)


DETERMINISM_CONFIG = """\
q = 13
gamma = 2
m = 3
n = 12
msg_len = 2
k = 2
trials = 300
seed = 12345
channel = random
errors = 2
"""


def criterion_10_determinism() -> CriterionResult:
    def run():
        with tempfile.TemporaryDirectory() as tmp:
            cfg = Path(tmp) / "exp.cfg"
            cfg.write_text(DETERMINISM_CONFIG)
            outs = []
            codes = []
            for name in ("a.csv", "b.csv"):
                path = Path(tmp) / name
                code, _ = _cli(["experiment", str(cfg), "--out", str(path)])
                codes.append(code)
                outs.append(path.read_bytes())
        same = outs[0] == outs[1]
        rows = outs[0].decode().strip().splitlines()
        return same and codes == [0, 0], f"two runs identical={same}, exit codes {codes}, {len(rows)} CSV lines"
    return _timed(10, "experiment determinism", run)


CRITERIA = (
    criterion_1_oracle_equivalence,
    criterion_2_list_bound,
    criterion_3_line_intersections,
    criterion_4_plane_intersections,
    criterion_5_wronskian_independence,
    criterion_6_rank_deficit,
    criterion_7_unique_decoding,
    criterion_8_pruning_equivalence,
    criterion_9_bounds_table,
    criterion_10_determinism,
)


def run_all(only=None) -> list[CriterionResult]:
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        if only and i not in only:
            continue
        results.append(fn())
    return results
