"""Offline-first client for cross-checking integer sequences against OEIS.

Reads b-files ("n a(n)" per line) from a local cache directory, falling
back to data files shipped with the package; network fetches happen only
when explicitly enabled and are stored verbatim for later offline use.
Concurrent cache writes are serialized with an advisory file lock.
"""

from __future__ import annotations

import datetime as _dt
import fcntl
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .errors import CacheMissError, InvalidInputError

OEIS_URL = "https://oeis.org/{id}/b{digits}.txt"
CACHE_ENV = "ADAMS_SPECTRA_CACHE"

_ID_RE = re.compile(r"^A(\d{1,7})$")


def normalize_id(sequence_id: str) -> str:
    """Canonical form: 'A' followed by at least six digits."""
    text = sequence_id.strip().upper()
    match = _ID_RE.match(text)
    if not match:
        raise InvalidInputError(
            f"not a sequence id: {sequence_id!r} (expected A followed by "
            "digits)", value=sequence_id)
    return "A" + match.group(1).zfill(6)


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "adams-spectra" / "oeis"


def _seed_dir() -> Path:
    return Path(__file__).resolve().parent / "data" / "oeis"


def _bfile_name(sequence_id: str) -> str:
    return f"b{sequence_id[1:]}.txt"


def parse_bfile(text: str) -> List[int]:
    """Extract the terms of a b-file, ignoring comments and blank lines."""
    terms: List[Tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) < 2:
            raise InvalidInputError(
                f"malformed b-file line {lineno}: {line!r}")
        try:
            terms.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidInputError(
                f"malformed b-file line {lineno}: {line!r}")
    return [value for _, value in terms]


@dataclass(frozen=True)
class OeisRecord:
    sequence_id: str
    terms: Tuple[int, ...]
    fetched_at: Optional[str]     # ISO timestamp of the cache file
    offline: bool                 # True when served without network access

    def to_json(self) -> dict:
        return {
            "id": self.sequence_id,
            "terms": list(self.terms),
            "fetched_at": self.fetched_at,
            "offline": self.offline,
        }


@dataclass(frozen=True)
class OeisMatch:
    sequence_id: str
    matched: bool
    compared: int                 # terms actually compared
    first_mismatch: Optional[int]  # 0-based index into the supplied values
    values: Tuple[int, ...]
    terms: Tuple[int, ...]
    offline: bool

    def to_json(self) -> dict:
        return {
            "id": self.sequence_id,
            "matched": self.matched,
            "compared": self.compared,
            "first_mismatch": self.first_mismatch,
            "values": list(self.values),
            "offline": self.offline,
        }


def _file_timestamp(path: Path) -> str:
    return _dt.datetime.fromtimestamp(
        path.stat().st_mtime, tz=_dt.timezone.utc).isoformat()


def _write_cache(cache_dir: Path, name: str, text: str) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    lock_path = cache_dir / ".lock"
    target = cache_dir / name
    with open(lock_path, "w") as lock:
        fcntl.flock(lock, fcntl.LOCK_EX)
        try:
            fd, tmp = tempfile.mkstemp(dir=str(cache_dir), suffix=".tmp")
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp, target)
        finally:
            fcntl.flock(lock, fcntl.LOCK_UN)
    return target


def _fetch_bfile(sequence_id: str) -> str:
    import requests

    url = OEIS_URL.format(id=sequence_id, digits=sequence_id[1:])
    response = requests.get(url, timeout=30)
    response.raise_for_status()
    return response.text


def load_record(sequence_id: str, cache_dir: Optional[os.PathLike] = None,
                allow_network: bool = False) -> OeisRecord:
    """Terms of a sequence from the cache, the packaged seeds, or (only
    with allow_network) the live b-file endpoint."""
    sid = normalize_id(sequence_id)
    name = _bfile_name(sid)
    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    for directory in (cache, _seed_dir()):
        path = directory / name
        if path.is_file():
            return OeisRecord(
                sequence_id=sid,
                terms=tuple(parse_bfile(path.read_text())),
                fetched_at=_file_timestamp(path),
                offline=True)
    if not allow_network:
        raise CacheMissError(
            f"{sid} is not cached and network access is disabled "
            "(pass allow_network / --allow-network to fetch)", value=sid)
    text = _fetch_bfile(sid)
    terms = tuple(parse_bfile(text))
    path = _write_cache(cache, name, text)
    return OeisRecord(sequence_id=sid, terms=terms,
                      fetched_at=_file_timestamp(path), offline=False)


def oeis_check(sequence_id: str, values: Sequence[int],
               cache_dir: Optional[os.PathLike] = None,
               allow_network: bool = False) -> OeisMatch:
    """Prefix-match computed values against the reference terms.

    Compares as many leading terms as both sides provide; the verdict is a
    match when every compared term agrees and at least one term was
    compared.
    """
    record = load_record(sequence_id, cache_dir=cache_dir,
                         allow_network=allow_network)
    vals = tuple(int(x) for x in values)
    compared = min(len(vals), len(record.terms))
    first_mismatch = None
    for i in range(compared):
        if vals[i] != record.terms[i]:
            first_mismatch = i
            break
    matched = compared > 0 and first_mismatch is None
    return OeisMatch(
        sequence_id=record.sequence_id, matched=matched, compared=compared,
        first_mismatch=first_mismatch, values=vals, terms=record.terms,
        offline=record.offline)
