"""Append-only JSONL catalog of enumeration results, plus the CSV summary.

Record format (one JSON object per line, UTF-8, compact separators, keys in
exactly this order):

    {"n": 4,
     "max_t": "11",                      # decimal string, exact
     "count": 4,
     "members": ["2,1,4,3", ...],        # canonical text, sorted by value
     "mode": "exhaustive",
     "tool_version": "0.1.0",
     "checksum": "<sha256 hex>"}

checksum = SHA-256 of the UTF-8 encoding of max_t and the members joined
with newlines: ``"\\n".join([max_t, *members])``.  ``n``/``count``/``mode``
are guarded by the structural validation instead (count must equal the
member count, every member must be a canonical permutation of 1..n).

The file is append-only: a record is never rewritten.  Appending a second
record for an existing (n, mode) pair is a conflict unless forced, in which
case the later record supersedes the earlier one for summary purposes
(readers still see both, in file order).  Appends take an exclusive
advisory lock, reads a shared one, so concurrent writers cannot interleave
partial lines.
"""
from __future__ import annotations

import fcntl
import importlib.metadata
import json
import os
from dataclasses import asdict, dataclass
from hashlib import sha256
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CatalogConflictError, CatalogCorruptionError, InputError
from .perms import format_permutation, parse_permutation
from .search import RCResult

try:
    TOOL_VERSION = importlib.metadata.version("rollercoaster")
except importlib.metadata.PackageNotFoundError:  # running from a bare checkout
    TOOL_VERSION = "0+unknown"

_FIELDS = ("n", "max_t", "count", "members", "mode", "tool_version", "checksum")

DEFAULT_STORE = "rc_catalog.jsonl"


def default_catalog_path() -> Path:
    """The store path: $RC_CATALOG if set, else ./rc_catalog.jsonl."""
    return Path(os.environ.get("RC_CATALOG", DEFAULT_STORE))


def compute_checksum(max_t: str, members: Sequence[str]) -> str:
    """SHA-256 hex over the max value and the sorted member list.

    >>> compute_checksum("2", ["1,3,2"])[:16]
    'dbdd70e96ac36a5c'
    """
    payload = "\n".join([max_t, *members])
    return sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CatalogRecord:
    n: int
    max_t: str
    count: int
    members: tuple[str, ...]
    mode: str
    tool_version: str
    checksum: str

    @classmethod
    def from_result(cls, rc: RCResult, *, tool_version: str = TOOL_VERSION) -> "CatalogRecord":
        rc.validate()
        max_t = str(rc.max_t)
        members = tuple(format_permutation(m) for m in rc.members)
        return cls(
            n=rc.n,
            max_t=max_t,
            count=len(members),
            members=members,
            mode=rc.mode,
            tool_version=tool_version,
            checksum=compute_checksum(max_t, members),
        )

    def validate(self) -> "CatalogRecord":
        """Raise CatalogCorruptionError unless every invariant holds."""

        def bad(msg: str) -> CatalogCorruptionError:
            return CatalogCorruptionError(msg)

        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise bad(f"bad n: {self.n!r}")
        if not (isinstance(self.max_t, str) and self.max_t.isdigit()):
            raise bad(f"max_t must be a decimal string: {self.max_t!r}")
        if self.count != len(self.members) or self.count < 1:
            raise bad(f"count {self.count} != {len(self.members)} members")
        if not (isinstance(self.mode, str) and self.mode):
            raise bad(f"bad mode: {self.mode!r}")
        parsed = []
        for s in self.members:
            try:
                p = parse_permutation(s)
            except InputError as e:
                raise bad(f"bad member {s!r}: {e}") from None
            if format_permutation(p) != s:
                raise bad(f"member {s!r} is not in canonical form")
            if len(p) != self.n:
                raise bad(f"member {s!r} has length {len(p)}, record says n={self.n}")
            parsed.append(p)
        if parsed != sorted(set(parsed)):
            raise bad("members are not sorted and duplicate-free")
        if self.checksum != compute_checksum(self.max_t, self.members):
            raise bad("checksum mismatch")
        return self

    def to_json_line(self) -> str:
        record = asdict(self)
        record["members"] = list(self.members)
        assert tuple(record) == _FIELDS
        return json.dumps(record, separators=(",", ":"))


def _parse_line(line: str, lineno: int) -> CatalogRecord:
    def bad(msg: str) -> CatalogCorruptionError:
        return CatalogCorruptionError(f"line {lineno}: {msg}")

    try:
        obj = json.loads(line)
    except json.JSONDecodeError as e:
        raise bad(f"not valid JSON ({e.msg})") from None
    if not isinstance(obj, dict) or tuple(obj) != _FIELDS:
        raise bad(f"keys must be exactly {list(_FIELDS)} in order")
    if not (isinstance(obj["members"], list) and all(isinstance(s, str) for s in obj["members"])):
        raise bad("members must be a list of strings")
    rec = CatalogRecord(
        n=obj["n"],
        max_t=obj["max_t"],
        count=obj["count"],
        members=tuple(obj["members"]),
        mode=obj["mode"],
        tool_version=obj["tool_version"],
        checksum=obj["checksum"],
    )
    try:
        return rec.validate()
    except CatalogCorruptionError as e:
        raise bad(str(e)) from None


def read_records(store: str | Path) -> list[CatalogRecord]:
    """All records in file order, each checksum- and invariant-validated."""
    records = []
    with open(store, "r", encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_SH)
        try:
            for lineno, line in enumerate(fh, start=1):
                if line.strip():
                    records.append(_parse_line(line.rstrip("\n"), lineno))
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)
    return records


def write_record(rec: CatalogRecord, store: str | Path, *, force: bool = False) -> None:
    """Append one validated record; duplicate (n, mode) conflicts unless forced."""
    rec.validate()
    with open(store, "a+", encoding="utf-8") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            fh.seek(0)
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                existing = _parse_line(line.rstrip("\n"), lineno)
                if existing.n == rec.n and existing.mode == rec.mode and not force:
                    raise CatalogConflictError(
                        f"store already has a record for n={rec.n} mode={rec.mode} "
                        f"(line {lineno}); pass force to supersede it"
                    )
            fh.write(rec.to_json_line() + "\n")
            fh.flush()
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def export_sequence(records: Iterable[CatalogRecord]) -> str:
    """The catalog as CSV text: header ``n,max_t,count``, one row per n, ascending.

    The latest record per (n, mode) is the effective one; if the effective
    records for one n disagree across modes, that is a conflict worth
    stopping for, not averaging over.

    >>> export_sequence([])
    'n,max_t,count\\n'
    """
    effective: dict[tuple[int, str], CatalogRecord] = {}
    for rec in records:
        effective[(rec.n, rec.mode)] = rec
    by_n: dict[int, CatalogRecord] = {}
    for rec in effective.values():
        other = by_n.get(rec.n)
        if other is None:
            by_n[rec.n] = rec
        elif (other.max_t, other.count, other.members) != (rec.max_t, rec.count, rec.members):
            raise CatalogConflictError(
                f"records for n={rec.n} disagree across modes "
                f"({other.mode}: max_t={other.max_t}, {rec.mode}: max_t={rec.max_t})"
            )
    lines = ["n,max_t,count"]
    for n in sorted(by_n):
        rec = by_n[n]
        lines.append(f"{rec.n},{rec.max_t},{rec.count}")
    return "\n".join(lines) + "\n"
