"""Readers for edge lists and publication records.

Two input formats are understood:

* edge CSV, ``author_a,author_b,count`` per line, optional header, ``#`` comments
* publications JSONL, ``{"id": "...", "authors": ["...", ...]}`` per line

Publications become edges by full counting: every unordered pair of distinct
authors on a publication gets one joint publication.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from itertools import combinations
from operator import itemgetter
from typing import Iterable, NamedTuple, TextIO

from .errors import EmptyAuthorList, MalformedLine, NonPositiveCount, SelfEdge
from .graph import clean_label

__all__ = [
    "EdgeRecord",
    "PublicationRecord",
    "expand_publications",
    "load_edge_csv",
    "load_publications_jsonl",
    "parse_edge_csv",
    "parse_publications_jsonl",
    "write_edge_csv",
]

EDGE_HEADER = ("author_a", "author_b", "count")


class EdgeRecord(NamedTuple):
    author_a: str
    author_b: str
    count: int


class PublicationRecord(NamedTuple):
    id: str
    authors: tuple[str, ...]


def _lines(source: str | TextIO | Iterable[str]) -> Iterable[str]:
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def parse_edge_csv(source: str | TextIO | Iterable[str]) -> list[EdgeRecord]:
    """Parse ``author_a,author_b,count`` lines. Fields may be CSV-quoted."""
    records = []
    for lineno, line in enumerate(_lines(source), start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        fields = next(csv.reader([text]))
        if len(fields) != 3:
            raise MalformedLine(f"expected 3 fields, got {len(fields)}", lineno)
        fields = [f.strip() for f in fields]
        if tuple(fields) == EDGE_HEADER:
            continue
        a, b, raw = fields
        try:
            count = int(raw)
        except ValueError:
            raise MalformedLine(f"count is not an integer: {raw!r}", lineno) from None
        if not a or not b:
            raise MalformedLine("empty author name", lineno)
        if a == b:
            raise SelfEdge(f"self-edge on author {a!r}", lineno)
        if count <= 0:
            raise NonPositiveCount(f"count must be positive, got {count}", lineno)
        records.append(EdgeRecord(a, b, count))
    return records


def parse_publications_jsonl(source: str | TextIO | Iterable[str]) -> list[PublicationRecord]:
    """Parse one publication object per line.

    Author names are trimmed and de-duplicated keeping first occurrence;
    a missing ``id`` defaults to the line number.
    """
    records = []
    for lineno, line in enumerate(_lines(source), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedLine(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(obj, dict):
            raise MalformedLine("expected a JSON object", lineno)
        authors = obj.get("authors")
        if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
            raise MalformedLine("'authors' must be a list of strings", lineno)
        pub_id = obj.get("id", str(lineno))
        if not isinstance(pub_id, str):
            raise MalformedLine("'id' must be a string", lineno)
        try:
            names = tuple(dict.fromkeys(clean_label(a) for a in authors))
        except ValueError:
            raise MalformedLine("empty author name", lineno) from None
        if not names:
            raise EmptyAuthorList(f"publication {pub_id!r} has no authors", lineno)
        records.append(PublicationRecord(pub_id, names))
    return records


def expand_publications(pubs: Iterable[PublicationRecord]) -> list[EdgeRecord]:
    """Aggregate co-authorship pairs, sorted by ``(author_a, author_b)`` with ``a < b``."""
    tally: Counter[tuple[str, str]] = Counter()
    for pub in pubs:
        authors = sorted(set(pub.authors))
        if len(authors) > 1:
            tally.update(combinations(authors, 2))
    rows = [(a, b, c) for (a, b), c in tally.items()]
    # two stable single-key sorts beat one sort on tuple keys
    rows.sort(key=itemgetter(1))
    rows.sort(key=itemgetter(0))
    return list(map(EdgeRecord._make, rows))


def write_edge_csv(records: Iterable[EdgeRecord], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(EDGE_HEADER)
    for rec in records:
        writer.writerow((rec.author_a, rec.author_b, rec.count))


def load_edge_csv(path: str) -> list[EdgeRecord]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_edge_csv(fh)


def load_publications_jsonl(path: str) -> list[PublicationRecord]:
    with open(path, encoding="utf-8") as fh:
        return parse_publications_jsonl(fh)

