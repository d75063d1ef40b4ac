"""
Sequence lookup against the OEIS search endpoint.

The HTTP transport is injectable so that tests stay hermetic.  Answers are
cached as one JSON file per query under the cache directory.  When the
network is unavailable, or ``offline=True``, terms are matched against a
small built-in table of the sequences this package relies on.

Environment:
    VINCULAR_OEIS_URL      search endpoint (default https://oeis.org/search)
    VINCULAR_OEIS_TIMEOUT  seconds (default 10)
    VINCULAR_OEIS_CACHE    cache directory (default ~/.cache/vincular/oeis)
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import urllib.parse
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import formulas

__all__ = ["Match", "LookupResult", "OEISClient", "lookup", "SEED_SEQUENCES", "urllib_transport"]

log = logging.getLogger(__name__)

DEFAULT_URL = "https://oeis.org/search"
MIN_TERMS = 4

# (url, params, timeout) -> parsed JSON
Transport = Callable[[str, dict, float], object]

SEED_SEQUENCES = {
    "A000110": ("Bell or exponential numbers: number of ways to partition a set of n labeled elements.",
                lambda n: formulas.bell(n)),
    "A000108": ("Catalan numbers: C(n) = binomial(2n,n)/(n+1) = (2n)!/(n!(n+1)!).",
                lambda n: formulas.catalan(n)),
    "A001006": ("Motzkin numbers: number of ways of drawing any number of nonintersecting chords joining n (labeled) points on a circle.",
                lambda n: formulas.motzkin(n)),
    "A000085": ("Number of self-inverse permutations on n letters, also known as involutions; number of standard Young tableaux with n cells.",
                lambda n: formulas.involutions(n)),
}
_SEED_TERMS = 40


@dataclass(frozen=True)
class Match:
    id: str
    name: str


@dataclass(frozen=True)
class LookupResult:
    matches: tuple[Match, ...]
    source: str  # "network", "cache" or "offline"
    degraded: bool = False

    @property
    def ids(self) -> list[str]:
        return [m.id for m in self.matches]


def urllib_transport(url: str, params: dict, timeout: float) -> object:
    query = urllib.parse.urlencode(params)
    with urllib.request.urlopen(f"{url}?{query}", timeout=timeout) as resp:
        return json.loads(resp.read().decode("utf-8"))


def _parse_response(payload) -> tuple[Match, ...]:
    # older endpoints wrap hits in {"results": [...]}, newer ones return the list
    if isinstance(payload, dict):
        payload = payload.get("results")
    if not payload:
        return ()
    return tuple(Match(f"A{int(r['number']):06d}", r.get("name", "")) for r in payload)


def _contains_run(haystack: Sequence[int], needle: Sequence[int]) -> bool:
    k = len(needle)
    return any(list(haystack[i:i + k]) == list(needle) for i in range(len(haystack) - k + 1))


def offline_matches(terms: Sequence[int]) -> tuple[Match, ...]:
    out = []
    for sid, (name, term) in SEED_SEQUENCES.items():
        if _contains_run([term(n) for n in range(_SEED_TERMS)], terms):
            out.append(Match(sid, name))
    return tuple(out)


@dataclass
class OEISClient:
    transport: Transport | None = None
    cache_dir: Path | None = None
    url: str = field(default_factory=lambda: os.environ.get("VINCULAR_OEIS_URL", DEFAULT_URL))
    timeout: float = field(default_factory=lambda: float(os.environ.get("VINCULAR_OEIS_TIMEOUT", "10")))
    offline: bool = False

    def __post_init__(self):
        if self.cache_dir is None:
            env = os.environ.get("VINCULAR_OEIS_CACHE")
            self.cache_dir = Path(env) if env else Path.home() / ".cache" / "vincular" / "oeis"
        self.cache_dir = Path(self.cache_dir)
        if self.transport is None:
            self.transport = urllib_transport

    def _cache_path(self, terms: Sequence[int]) -> Path:
        key = hashlib.sha256(",".join(map(str, terms)).encode()).hexdigest()
        return self.cache_dir / f"{key}.json"

    def _read_cache(self, terms: Sequence[int]) -> tuple[Match, ...] | None:
        path = self._cache_path(terms)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("terms") != [str(t) for t in terms]:
            return None
        return tuple(Match(m["id"], m["name"]) for m in data["matches"])

    def _write_cache(self, terms: Sequence[int], matches: tuple[Match, ...]) -> None:
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        doc = {"terms": [str(t) for t in terms],
               "matches": [{"id": m.id, "name": m.name} for m in matches]}
        fd, tmp = tempfile.mkstemp(dir=self.cache_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh, indent=1)
            os.replace(tmp, self._cache_path(terms))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def lookup(self, terms: Sequence[int]) -> LookupResult:
        terms = [int(t) for t in terms]
        if len(terms) < MIN_TERMS:
            raise ValueError(f"need at least {MIN_TERMS} terms, got {len(terms)}")
        if self.offline:
            return LookupResult(offline_matches(terms), "offline", degraded=False)
        cached = self._read_cache(terms)
        if cached is not None:
            return LookupResult(cached, "cache")
        params = {"q": ",".join(map(str, terms)), "fmt": "json"}
        try:
            payload = self.transport(self.url, params, self.timeout)
        except OSError as exc:
            log.warning("OEIS unreachable (%s); using the offline table", exc)
            return LookupResult(offline_matches(terms), "offline", degraded=True)
        matches = _parse_response(payload)
        self._write_cache(terms, matches)
        return LookupResult(matches, "network")


def lookup(terms: Sequence[int], **kwargs) -> LookupResult:
    return OEISClient(**kwargs).lookup(terms)
