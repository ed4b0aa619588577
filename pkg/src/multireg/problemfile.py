"""Problem-file ingestion for the command line: strict JSON schema by hand.

A problem file names the ambient product and exactly one payload (curve,
complex, presentation, or line-bundle sum) plus optional run options.
Unknown keys anywhere are rejected: silent typos in input files have
burned enough afternoons.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cohom import FreePresentation
from .glp import CurveData
from .regions import Ambient, Region, Vec, as_vec
from .twistcx import TwistComplex


class ProblemError(ValueError):
    """Malformed problem file."""


PAYLOAD_KEYS = ("curve", "complex", "presentation", "sum")
TOP_KEYS = {"ambient", "options", *PAYLOAD_KEYS}
OPTION_KEYS = {"window", "prime", "classical_en", "advisory", "regions"}


@dataclass(frozen=True)
class ProblemOptions:
    window: tuple[tuple[int, int], ...] | None = None
    prime: int | None = None
    classical_en: bool = False
    advisory: bool = False
    regions: tuple[Region | None, ...] | None = None


@dataclass(frozen=True)
class Problem:
    ambient: Ambient
    kind: str
    curve: CurveData | None = None
    complex: TwistComplex | None = None
    presentation: FreePresentation | None = None
    sum: tuple[tuple[Vec, int], ...] | None = None
    options: ProblemOptions = field(default_factory=ProblemOptions)


def parse_window(raw, n: int) -> tuple[tuple[int, int], ...]:
    """Accept [[lo,hi],...] lists or the flag syntax "lo..hi,lo..hi"."""
    if isinstance(raw, str):
        parts = raw.split(",")
        out = []
        for part in parts:
            lo, sep, hi = part.partition("..")
            if not sep:
                raise ProblemError(f"window part {part!r} is not of the form lo..hi")
            try:
                out.append((int(lo), int(hi)))
            except ValueError as exc:
                raise ProblemError(f"window part {part!r}: {exc}") from None
    elif isinstance(raw, list):
        out = []
        for part in raw:
            if not (isinstance(part, list) and len(part) == 2):
                raise ProblemError(f"window entry {part!r} must be [lo, hi]")
            out.append((int(part[0]), int(part[1])))
    else:
        raise ProblemError(f"window must be a string or list, got {raw!r}")
    if len(out) != n:
        raise ProblemError(f"window needs {n} ranges, got {len(out)}")
    for lo, hi in out:
        if lo > hi:
            raise ProblemError(f"window range {lo}..{hi} is empty")
    return tuple(out)


def _parse_sum(ambient: Ambient, raw) -> tuple[tuple[Vec, int], ...]:
    if not isinstance(raw, list):
        raise ProblemError("sum payload must be a list of [twist, rank] pairs")
    out = []
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise ProblemError(f"sum entry {entry!r} must be [twist, rank]")
        m, rank = entry
        out.append((as_vec(m, ambient.n), int(rank)))
    return tuple(out)


def _parse_options(ambient: Ambient, raw) -> ProblemOptions:
    if not isinstance(raw, dict):
        raise ProblemError("options must be an object")
    extra = set(raw) - OPTION_KEYS
    if extra:
        raise ProblemError(f"unknown option keys {sorted(extra)}")
    window = parse_window(raw["window"], ambient.n) if "window" in raw else None
    prime = raw.get("prime")
    if prime is not None and not isinstance(prime, int):
        raise ProblemError(f"prime must be an integer, got {prime!r}")
    for flag in ("classical_en", "advisory"):
        if flag in raw and not isinstance(raw[flag], bool):
            raise ProblemError(f"{flag} must be true or false")
    regions = None
    if "regions" in raw:
        if not isinstance(raw["regions"], list):
            raise ProblemError("regions must be a list of region objects or nulls")
        regions = tuple(
            None if entry is None else Region.from_json(ambient.n, entry)
            for entry in raw["regions"]
        )
    return ProblemOptions(
        window=window,
        prime=prime,
        classical_en=bool(raw.get("classical_en", False)),
        advisory=bool(raw.get("advisory", False)),
        regions=regions,
    )


def parse_problem(obj) -> Problem:
    if not isinstance(obj, dict):
        raise ProblemError("problem file must contain a JSON object")
    extra = set(obj) - TOP_KEYS
    if extra:
        raise ProblemError(f"unknown keys {sorted(extra)}")
    if "ambient" not in obj:
        raise ProblemError("problem file needs an ambient")
    ambient = Ambient.from_json(obj["ambient"])
    payloads = [k for k in PAYLOAD_KEYS if k in obj]
    if len(payloads) != 1:
        raise ProblemError(
            f"problem file needs exactly one of {list(PAYLOAD_KEYS)}, got {payloads}"
        )
    kind = payloads[0]
    options = _parse_options(ambient, obj.get("options", {}))

    curve = cx = pres = summands = None
    try:
        if kind == "curve":
            raw = dict(obj["curve"])
            raw.setdefault("r", list(ambient.r))
            curve = CurveData.from_json(raw)
            if curve.ambient != ambient:
                raise ProblemError(
                    f"curve r {list(curve.ambient.r)} disagrees with ambient {list(ambient.r)}"
                )
        elif kind == "complex":
            raw = obj["complex"]
            if isinstance(raw, dict) and set(raw) == {"terms"}:
                raw = {"ambient": list(ambient.r), "terms": raw["terms"]}
            cx = TwistComplex.from_json(raw)
            if cx.ambient != ambient:
                raise ProblemError("complex ambient disagrees with problem ambient")
        elif kind == "presentation":
            pres = FreePresentation.from_json(ambient, obj["presentation"])
        else:
            summands = _parse_sum(ambient, obj["sum"])
    except ProblemError:
        raise
    except ValueError as exc:
        raise ProblemError(str(exc)) from exc

    return Problem(
        ambient=ambient,
        kind=kind,
        curve=curve,
        complex=cx,
        presentation=pres,
        sum=summands,
        options=options,
    )


def load_problem(path) -> Problem:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ProblemError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ProblemError(f"{path} is not valid JSON: {exc}") from exc
    return parse_problem(obj)
