"""Upper bounds on collaboration distances from partial knowledge.

A :class:`BoundsLedger` holds facts such as "E and Eg are at distance 3" or
"R and Eg wrote at least 73 papers together" and derives the tightest upper
bound these facts imply for any pair, using only

* ``(6)``   identity, ``d(A, A) = 0``
* ``(8)``   ``d(A, B) <= d(A, C) + d(C, B)``
* ``(9)``   ``d(A, B) <= d(A, C) + d(B, C)`` (``(8)`` with the second leg stated reversed)
* ``(10)``  weighted distance never exceeds unweighted distance
* ``(11)``  weighted distance of co-authors is at most ``1 / count``

Primed rule names (``(8')``, ...) denote the weighted metric. The closure of
upper bounds under the triangle inequality is a shortest-path problem over the
graph whose edges are facts, so queries run Dijkstra on that graph.

Only upper bounds are derived. In particular a count never yields an
unweighted bound other than 1, and ``1/count`` is never compared against an
unweighted distance.
"""

from __future__ import annotations

import enum
import heapq
import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .distance import Metric
from .errors import (
    CollabDistError,
    InconsistentFact,
    InvalidFact,
    MalformedLine,
    MissingLink,
    UnknownAuthor,
)
from .formatting import fraction_str, parse_fraction
from .graph import clean_label

__all__ = [
    "BoundDerivation",
    "BoundsLedger",
    "CountFact",
    "DistanceFact",
    "FactKind",
    "Step",
    "chain_bound",
    "derived_base_facts",
    "load_facts",
    "parse_facts",
    "tightest_upper_bound",
]


class FactKind(str, enum.Enum):
    EXACT = "exact"
    UPPER = "upper"


@dataclass(frozen=True)
class CountFact:
    """``a`` and ``b`` co-authored at least ``min_count`` publications."""

    a: str
    b: str
    min_count: int

    def __post_init__(self):
        a, b = clean_label(self.a), clean_label(self.b)
        if a == b:
            raise InvalidFact(f"count fact needs two distinct authors, got {a!r} twice")
        if isinstance(self.min_count, bool) or not isinstance(self.min_count, int):
            raise InvalidFact(f"min_count must be an integer, got {self.min_count!r}")
        if self.min_count < 1:
            raise InvalidFact(f"min_count must be at least 1, got {self.min_count}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.a, self.b))

    def __str__(self) -> str:
        return f"count {_quote(self.a)} {_quote(self.b)} {self.min_count}"


@dataclass(frozen=True)
class DistanceFact:
    """Known distance (``EXACT``) or known upper bound (``UPPER``) for a pair."""

    a: str
    b: str
    metric: Metric
    kind: FactKind
    value: Fraction

    def __post_init__(self):
        a, b = clean_label(self.a), clean_label(self.b)
        metric = Metric.coerce(self.metric)
        try:
            kind = FactKind(self.kind)
        except ValueError:
            raise InvalidFact(f"kind must be 'exact' or 'upper', got {self.kind!r}") from None
        value = Fraction(self.value)
        if value < 0:
            raise InvalidFact(f"distance cannot be negative: {fraction_str(value)}")
        if (value == 0) != (a == b):
            raise InvalidFact(
                f"distance {fraction_str(value)} between {a!r} and {b!r}: "
                "zero exactly for identical authors"
            )
        if metric is Metric.UNWEIGHTED and value.denominator != 1:
            raise InvalidFact(f"unweighted distance must be an integer, got {fraction_str(value)}")
        for name, val in (("a", a), ("b", b), ("metric", metric), ("kind", kind), ("value", value)):
            object.__setattr__(self, name, val)

    @property
    def pair(self) -> frozenset[str]:
        return frozenset((self.a, self.b))

    def __str__(self) -> str:
        return (
            f"dist {self.metric.short} {self.kind.value} "
            f"{_quote(self.a)} {_quote(self.b)} {fraction_str(self.value)}"
        )


Fact = Union[CountFact, DistanceFact]


def _quote(label: str) -> str:
    return shlex.quote(label) if any(ch.isspace() for ch in label) else label


def _prime(rule: str, metric: Metric) -> str:
    return rule[:-1] + "')" if metric is Metric.WEIGHTED else rule


@dataclass(frozen=True)
class Step:
    """One inference: ``d(a, b) <= value`` under ``metric``.

    ``facts`` are the ledger facts read directly by this step and
    ``premises`` index earlier steps of the same derivation.
    """

    rule: str
    metric: Metric
    a: str
    b: str
    value: Fraction
    facts: tuple[Fact, ...] = ()
    premises: tuple[int, ...] = ()

    def describe(self) -> str:
        prime = "'" if self.metric is Metric.WEIGHTED else ""
        head = f"d{prime}({self.a}, {self.b}) <= {fraction_str(self.value)}"
        if self.facts:
            why = "; ".join(str(f) for f in self.facts)
        elif self.premises:
            why = " + ".join(f"step {i + 1}" for i in self.premises)
        else:
            why = "identity"
        return f"{head}  by {self.rule} [{why}]"


_TRIANGLE_RULES = {"(8)", "(9)", "(8')", "(9')"}


@dataclass(frozen=True)
class BoundDerivation:
    """Tightest derived upper bound for ``(a, b)``; ``bound`` is None when unknown."""

    a: str
    b: str
    metric: Metric
    bound: Fraction | None
    steps: tuple[Step, ...] = field(default=())

    @property
    def known(self) -> bool:
        return self.bound is not None

    def replay(self) -> Fraction | None:
        """Recompute every step from its cited facts and premises.

        Raises ``AssertionError`` when a recorded value does not follow.
        """
        values: list[Fraction] = []
        for i, step in enumerate(self.steps):
            if step.rule in ("(6)", "(6')"):
                value = Fraction(0)
            elif step.rule == "fact":
                (fact,) = step.facts
                value = Fraction(1) if isinstance(fact, CountFact) else fact.value
            elif step.rule == "(11)":
                (fact,) = step.facts
                assert isinstance(fact, CountFact), "(11) needs a count fact"
                value = Fraction(1, fact.min_count)
            elif step.rule == "(10)":
                (p,) = step.premises
                assert self.steps[p].metric is Metric.UNWEIGHTED
                value = values[p]
            elif step.rule in _TRIANGLE_RULES:
                p, q = step.premises
                value = values[p] + values[q]
            else:
                raise AssertionError(f"step {i + 1}: unknown rule {step.rule!r}")
            assert value == step.value, f"step {i + 1} claims {step.value}, replays to {value}"
            values.append(value)
        if not self.steps:
            assert self.bound is None
            return None
        assert values[-1] == self.bound
        return values[-1]


# ----------------------------------------------------------------------


class BoundsLedger:
    """Collection of partial facts with triangle-inequality closure queries."""

    def __init__(self, facts: Iterable[Fact] = ()) -> None:
        self._authors: dict[str, int] = {}
        self._counts: dict[frozenset[str], CountFact] = {}
        self._exact: dict[tuple[frozenset[str], Metric], DistanceFact] = {}
        self._upper: dict[tuple[frozenset[str], Metric], DistanceFact] = {}
        self._frozen = False
        for fact in facts:
            self.add_fact(fact)

    # -- building -------------------------------------------------------
    def add_fact(self, fact: Fact) -> "BoundsLedger":
        if self._frozen:
            raise RuntimeError("ledger is frozen")
        if isinstance(fact, CountFact):
            self._add_count(fact)
        elif isinstance(fact, DistanceFact):
            self._add_distance(fact)
        else:
            raise TypeError(f"not a fact: {fact!r}")
        for label in (fact.a, fact.b):
            self._authors.setdefault(label, len(self._authors))
        return self

    def _add_count(self, fact: CountFact) -> None:
        exact = self._exact.get((fact.pair, Metric.UNWEIGHTED))
        if exact is not None and exact.value != 1:
            raise InconsistentFact(f"{fact} implies distance 1, contradicting {exact}")
        old = self._counts.get(fact.pair)
        if old is None or fact.min_count > old.min_count:
            self._counts[fact.pair] = fact

    def _add_distance(self, fact: DistanceFact) -> None:
        if fact.a == fact.b:
            return  # identity holds by definition
        key = (fact.pair, fact.metric)
        exact = self._exact.get(key)
        upper = self._upper.get(key)
        if fact.kind is FactKind.EXACT:
            if exact is not None and exact.value != fact.value:
                raise InconsistentFact(f"{fact} contradicts {exact}")
            if upper is not None and upper.value < fact.value:
                raise InconsistentFact(f"{fact} exceeds the known bound {upper}")
            if (
                fact.metric is Metric.UNWEIGHTED
                and fact.pair in self._counts
                and fact.value != 1
            ):
                raise InconsistentFact(f"{fact} contradicts {self._counts[fact.pair]}")
            if exact is None:
                self._exact[key] = fact
            self._upper.pop(key, None)  # superseded
        else:
            if exact is not None:
                if fact.value < exact.value:
                    raise InconsistentFact(f"{fact} is below the exact value {exact}")
                return
            if upper is None or fact.value < upper.value:
                self._upper[key] = fact

    def freeze(self) -> "BoundsLedger":
        self._frozen = True
        return self

    # -- inspection -----------------------------------------------------
    @property
    def authors(self) -> list[str]:
        return list(self._authors)

    def __contains__(self, label: str) -> bool:
        return clean_label(label) in self._authors

    @property
    def facts(self) -> list[Fact]:
        """Stored facts: counts first, then exact and upper distance facts."""
        return [*self._counts.values(), *self._exact.values(), *self._upper.values()]

    def _stated(self, metric: Metric) -> list[DistanceFact]:
        out = [f for (_, m), f in self._exact.items() if m is metric]
        out += [f for (_, m), f in self._upper.items() if m is metric]
        return out

    def derived_base_facts(self) -> list[DistanceFact]:
        out = []
        for fact in self._counts.values():
            out.append(
                DistanceFact(fact.a, fact.b, Metric.WEIGHTED, FactKind.UPPER, Fraction(1, fact.min_count))
            )
            out.append(DistanceFact(fact.a, fact.b, Metric.UNWEIGHTED, FactKind.EXACT, Fraction(1)))
        for fact in self._stated(Metric.UNWEIGHTED):
            out.append(DistanceFact(fact.a, fact.b, Metric.WEIGHTED, FactKind.UPPER, fact.value))
        return out

    # -- base edges of the fact graph -------------------------------------
    def _legs(self, metric: Metric) -> dict[frozenset[str], tuple[Fraction, int, list[Step]]]:
        """Best single-pair justification per pair: ``pair -> (value, rank, steps)``.

        Steps inside a leg use local premise indices starting at 0.
        """
        legs: dict[frozenset[str], tuple[Fraction, int, list[Step]]] = {}

        def offer(pair, value, rank, steps):
            old = legs.get(pair)
            if old is None or (value, rank) < old[:2]:
                legs[pair] = (value, rank, steps)

        for fact in self._stated(metric):
            offer(fact.pair, fact.value, 0, [Step("fact", metric, fact.a, fact.b, fact.value, (fact,))])
        for fact in self._counts.values():
            if metric is Metric.UNWEIGHTED:
                step = Step("fact", metric, fact.a, fact.b, Fraction(1), (fact,))
            else:
                step = Step("(11)", metric, fact.a, fact.b, Fraction(1, fact.min_count), (fact,))
            offer(fact.pair, step.value, 1, [step])
        if metric is Metric.WEIGHTED:
            for fact in self._stated(Metric.UNWEIGHTED):
                base = Step("fact", Metric.UNWEIGHTED, fact.a, fact.b, fact.value, (fact,))
                lift = Step("(10)", metric, fact.a, fact.b, fact.value, premises=(0,))
                offer(fact.pair, fact.value, 2, [base, lift])
        return legs

    def _check_author(self, label: str) -> str:
        label = clean_label(label)
        if label not in self._authors:
            raise UnknownAuthor(f"no fact mentions {label!r}")
        return label

    # -- derivations ----------------------------------------------------
    def _assemble(
        self,
        chain: Sequence[str],
        legs: Sequence[list[Step]],
        metric: Metric,
    ) -> BoundDerivation:
        a, b = chain[0], chain[-1]
        if len(chain) == 1:
            step = Step(_prime("(6)", metric), metric, a, a, Fraction(0))
            return BoundDerivation(a, b, metric, Fraction(0), (step,))
        steps: list[Step] = []
        running: int | None = None  # index of the step bounding d(a, chain[i])
        for i, leg in enumerate(legs):
            offset = len(steps)
            for s in leg:
                steps.append(
                    Step(s.rule, s.metric, s.a, s.b, s.value, s.facts, tuple(p + offset for p in s.premises))
                )
            leg_index = len(steps) - 1
            if running is None:
                running = leg_index
                continue
            via, nxt = chain[i], chain[i + 1]
            leg_step = steps[leg_index]
            rule = "(8)" if leg_step.a == via else "(9)"
            total = steps[running].value + leg_step.value
            steps.append(Step(_prime(rule, metric), metric, a, nxt, total, premises=(running, leg_index)))
            running = len(steps) - 1
        return BoundDerivation(a, b, metric, steps[running].value, tuple(steps))

    def tightest_upper_bound(self, a: str, b: str, metric: Metric | str) -> BoundDerivation:
        metric = Metric.coerce(metric)
        a, b = self._check_author(a), self._check_author(b)
        if a == b:
            return self._assemble([a], [], metric)
        legs = self._legs(metric)
        adjacency: dict[str, list[tuple[str, Fraction]]] = {}
        for pair, (value, _, _) in legs.items():
            x, y = sorted(pair, key=self._authors.__getitem__)
            adjacency.setdefault(x, []).append((y, value))
            adjacency.setdefault(y, []).append((x, value))
        order = self._authors

        best = {a: Fraction(0)}
        pred: dict[str, str] = {}
        done: set[str] = set()
        heap = [(Fraction(0), order[a], a)]
        while heap:
            d, _, x = heapq.heappop(heap)
            if x in done:
                continue
            done.add(x)
            if x == b:
                break
            for y, w in adjacency.get(x, ()):
                nd = d + w
                if y not in done and (y not in best or nd < best[y]):
                    best[y] = nd
                    pred[y] = x
                    heapq.heappush(heap, (nd, order[y], y))
        if b not in done:
            return BoundDerivation(a, b, metric, None, ())

        chain = [b]
        while chain[-1] != a:
            chain.append(pred[chain[-1]])
        chain.reverse()
        return self._assemble(
            chain, [legs[frozenset(p)][2] for p in zip(chain, chain[1:])], metric
        )

    def chain_bound(self, path: Sequence[str], metric: Metric | str) -> BoundDerivation:
        """Sum of per-pair upper bounds along an explicit chain of authors."""
        metric = Metric.coerce(metric)
        path = [self._check_author(x) for x in path]
        if not path:
            raise ValueError("chain must contain at least one author")
        legs = self._legs(metric)
        chain = [path[0]]
        used = []
        for x, y in zip(path, path[1:]):
            if x == y:
                continue
            leg = legs.get(frozenset((x, y)))
            if leg is None:
                raise MissingLink(f"no fact bounds the distance between {x!r} and {y!r}")
            chain.append(y)
            used.append(leg[2])
        return self._assemble(chain, used, metric)


def derived_base_facts(ledger: BoundsLedger) -> list[DistanceFact]:
    return ledger.derived_base_facts()


def tightest_upper_bound(ledger: BoundsLedger, a: str, b: str, metric: Metric | str) -> BoundDerivation:
    return ledger.tightest_upper_bound(a, b, metric)


def chain_bound(ledger: BoundsLedger, path: Sequence[str], metric: Metric | str) -> BoundDerivation:
    return ledger.chain_bound(path, metric)


# ----------------------------------------------------------------------
# facts file


def parse_facts(text: str | Iterable[str]) -> list[tuple[int, Fact]]:
    """Parse the line-oriented facts format into ``(lineno, fact)`` pairs.

    ::

        # comment
        count Kim Bellow 2
        dist u exact Lee Kim 3
        dist w upper "Ann Lee" Kim 5/2
    """
    lines = text.splitlines() if isinstance(text, str) else text
    out = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as exc:
            raise MalformedLine(str(exc), lineno) from None
        try:
            out.append((lineno, _parse_fact_tokens(tokens)))
        except CollabDistError as exc:
            raise type(exc)(str(exc), lineno) from None
        except ValueError as exc:
            raise MalformedLine(str(exc), lineno) from None
    return out


def _parse_fact_tokens(tokens: list[str]) -> Fact:
    head = tokens[0]
    if head == "count":
        if len(tokens) != 4:
            raise MalformedLine("expected: count <authorA> <authorB> <min_count>")
        return CountFact(tokens[1], tokens[2], int(tokens[3]))
    if head == "dist":
        if len(tokens) != 6:
            raise MalformedLine("expected: dist <u|w> <exact|upper> <authorA> <authorB> <value>")
        _, metric, kind, a, b, value = tokens
        if metric not in ("u", "w"):
            raise MalformedLine(f"metric must be 'u' or 'w', got {metric!r}")
        return DistanceFact(a, b, Metric.coerce(metric), FactKind(kind), parse_fraction(value))
    raise MalformedLine(f"unknown fact type {head!r}")


def load_facts(text: str | Iterable[str]) -> BoundsLedger:
    ledger = BoundsLedger()
    for lineno, fact in parse_facts(text):
        try:
            ledger.add_fact(fact)
        except CollabDistError as exc:
            raise type(exc)(str(exc), lineno) from None
    return ledger
