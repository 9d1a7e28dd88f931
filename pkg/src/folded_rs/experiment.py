"""Seeded decoding experiments that check every applicable bound per trial."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import decoder
from .bounds import decoding_radius, frs_list_bound
from .errors import ParameterError, ParseError
from .frs import FrsParams, agreement_count, corrupt, encode, make_params, random_message, random_word
from .oracle import ORACLE_LIMIT, adversarial_center, brute_force_list
from .subspace import DEFAULT_LIMIT, affine_hull
from .wronskian import rank_profile

CSV_HEADER = ("trial", "errors", "subspace_dim", "list_size", "oracle_list_size",
              "deficit_sum", "bound_radius_num", "bound_radius_den", "pass")
CHANNELS = ("random", "adversarial", "uniform")


@dataclass(frozen=True)
class ExperimentConfig:
    params: FrsParams
    k: int
    trials: int = 0
    seed: int = 0
    radius: Fraction | None = None
    channel: str = "random"
    errors: int = 0
    out: str | None = None
    oracle: bool = True
    limit: int = DEFAULT_LIMIT
    jobs: int = 1

    def __post_init__(self):
        if not 1 <= self.k <= self.params.m:
            raise ParameterError(f"k={self.k} must satisfy 1 <= k <= m={self.params.m}")
        if self.trials < 0:
            raise ParameterError("trials must be non-negative")
        if self.channel not in CHANNELS:
            raise ParameterError(f"channel must be one of {', '.join(CHANNELS)}")
        if not 0 <= self.errors <= self.params.N:
            raise ParameterError(f"errors={self.errors} outside [0, N={self.params.N}]")
        if self.seed < 0 or self.seed >= 2 ** 64:
            raise ParameterError("seed must be a 64-bit unsigned integer")

    @property
    def bound_radius(self) -> Fraction:
        if self.radius is not None:
            return self.radius
        return decoding_radius(self.params.m, self.k, self.params.rate)


_INT_KEYS = {"q", "gamma", "m", "n", "msg_len", "k", "trials", "seed", "errors", "limit", "jobs"}
_KNOWN = _INT_KEYS | {"radius", "channel", "out", "oracle"}


def parse_config(text: str) -> ExperimentConfig:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    raw: dict[str, tuple[str, int]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ParseError(f"expected key=value, got {body!r}", lineno)
        key, value = (s.strip() for s in body.split("=", 1))
        if key not in _KNOWN:
            raise ParseError(f"unknown key {key!r}", lineno)
        if key in raw:
            raise ParseError(f"duplicate key {key!r}", lineno)
        raw[key] = (value, lineno)
    vals = {}
    for key, (value, lineno) in raw.items():
        try:
            if key in _INT_KEYS:
                vals[key] = int(value)
            elif key == "radius":
                vals[key] = Fraction(value) if value else None
            elif key == "oracle":
                if value.lower() not in ("1", "0", "true", "false", "yes", "no"):
                    raise ValueError(value)
                vals[key] = value.lower() in ("1", "true", "yes")
            else:
                vals[key] = value
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad value for {key}: {value!r}", lineno) from exc
    missing = [k for k in ("q", "m", "n", "msg_len", "k") if k not in vals]
    if missing:
        raise ParseError(f"missing required keys: {', '.join(missing)}")
    params = make_params(vals.pop("q"), vals.pop("m"), vals.pop("n"), vals.pop("msg_len"),
                         gamma=vals.pop("gamma", None))
    return ExperimentConfig(params=params, **vals)


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    errors: int | None
    subspace_dim: int
    list_size: int
    oracle_list_size: int | None
    deficit_sum: int
    radius: Fraction
    dim_ok: bool
    list_bound_ok: bool
    deficit_ok: bool
    oracle_ok: bool
    sound: bool

    @property
    def passed(self) -> bool:
        return self.dim_ok and self.list_bound_ok and self.deficit_ok and self.oracle_ok and self.sound

    def row(self) -> list:
        return [self.trial, "" if self.errors is None else self.errors, self.subspace_dim,
                self.list_size, "" if self.oracle_list_size is None else self.oracle_list_size,
                self.deficit_sum, self.radius.numerator, self.radius.denominator, int(self.passed)]


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Independent per-trial seeds split off one root seed (numpy SeedSequence)."""
    children = np.random.SeedSequence(seed).spawn(trials)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


def _received_word(cfg: ExperimentConfig, rng: np.random.Generator):
    P = cfg.params
    if cfg.channel == "uniform":
        return random_word(P, rng), None
    if cfg.channel == "random":
        f = random_message(P, rng)
        c = encode(P, f)
        g = corrupt(P, c, cfg.errors, int(rng.integers(0, 2 ** 63)))
        return g, P.N - agreement_count(g, c)
    targets = [random_message(P, rng) for _ in range(min(max(cfg.k, 2), P.N))]
    g = adversarial_center(affine_hull(P, targets), targets, int(rng.integers(0, 2 ** 63)))
    return g, P.N - agreement_count(g, encode(P, targets[0]))


def run_trial(cfg: ExperimentConfig, index: int, seed: int) -> TrialRecord:
    P = cfg.params
    rng = np.random.default_rng(seed)
    g, errors = _received_word(cfg, rng)
    radius = cfg.bound_radius
    out = decoder.decode(P, cfg.k, g, radius=radius, limit=cfg.limit)
    H = out.subspace
    deficit, deficit_ok = 0, True
    if H is not None and H.dim >= 1:
        prof = rank_profile(H, check=False)
        deficit, deficit_ok = prof.deficit_sum, prof.deficit_sum <= prof.bound
    oracle_size, oracle_ok = None, True
    if cfg.oracle and P.message_space_size() <= ORACLE_LIMIT:
        orc = brute_force_list(P, g, radius)
        oracle_size = len(orc)
        oracle_ok = list(orc.members) == list(out.list)
    guaranteed = decoding_radius(P.m, cfg.k, P.rate)
    list_ok = radius > guaranteed or len(out.list) <= frs_list_bound(cfg.k)
    sound = all(
        (P.N - agreement_count(encode(P, f), g)) < radius * P.N for f in out.list
    )
    return TrialRecord(
        trial=index,
        errors=errors,
        subspace_dim=out.subspace_dim,
        list_size=len(out.list),
        oracle_list_size=oracle_size,
        deficit_sum=deficit,
        radius=radius,
        dim_ok=out.subspace_dim <= cfg.k - 1,
        list_bound_ok=list_ok,
        deficit_ok=deficit_ok,
        oracle_ok=oracle_ok,
        sound=sound,
    )


def _run_indexed(args):
    cfg, index, seed = args
    return run_trial(cfg, index, seed)


def run_experiment(cfg: ExperimentConfig) -> list[TrialRecord]:
    jobs = [(cfg, i, s) for i, s in enumerate(trial_seeds(cfg.seed, cfg.trials))]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_run_indexed, jobs, chunksize=16))
    return [_run_indexed(j) for j in jobs]


def summary_row(cfg: ExperimentConfig, records: list[TrialRecord]) -> list:
    oracle = [r.oracle_list_size for r in records if r.oracle_list_size is not None]
    radius = cfg.bound_radius
    return ["summary", "", max(r.subspace_dim for r in records), max(r.list_size for r in records),
            max(oracle) if oracle else "", max(r.deficit_sum for r in records),
            radius.numerator, radius.denominator, int(all(r.passed for r in records))]


def render_csv(cfg: ExperimentConfig, records: list[TrialRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow(r.row())
    if records:
        w.writerow(summary_row(cfg, records))
    return buf.getvalue()


def all_passed(records: list[TrialRecord]) -> bool:
    return all(r.passed for r in records)

