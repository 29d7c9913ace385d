"""
証明書の型定義

Certificate は命題ごとの判定・包含区間・サブチェック木を保持する。
PASS はすべてのサブチェックが PASS のときに限る。
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum

from ljcert.analysis.interval import Interval


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"

    @classmethod
    def combine(cls, verdicts: Iterable["Verdict"]) -> "Verdict":
        """FAIL が1つでもあれば FAIL、すべて PASS なら PASS、それ以外は INCONCLUSIVE"""
        items = list(verdicts)
        if any(v is cls.FAIL for v in items):
            return cls.FAIL
        if all(v is cls.PASS for v in items):
            return cls.PASS
        return cls.INCONCLUSIVE


@dataclass(frozen=True)
class SubCheck:
    label: str
    verdict: Verdict
    witness: Interval | None = None
    detail: str | None = None
    children: tuple["SubCheck", ...] = ()
    stats: Mapping[str, int] = field(default_factory=dict)

    @classmethod
    def group(cls, label: str, children: Iterable["SubCheck"], detail: str | None = None) -> "SubCheck":
        kids = tuple(children)
        return cls(label, Verdict.combine(c.verdict for c in kids), detail=detail, children=kids)


@dataclass(frozen=True)
class Enclosure:
    """名前付きの包含区間。主張する値があれば claim に記録する。"""

    name: str
    value: Interval
    claim: str | None = None


@dataclass(frozen=True)
class Certificate:
    proposition: str
    verdict: Verdict
    enclosures: tuple[Enclosure, ...] = ()
    checks: tuple[SubCheck, ...] = ()

    @classmethod
    def build(
        cls,
        proposition: str,
        checks: Iterable[SubCheck],
        enclosures: Iterable[Enclosure] = (),
    ) -> "Certificate":
        items = tuple(checks)
        return cls(
            proposition=proposition,
            verdict=Verdict.combine(c.verdict for c in items),
            enclosures=tuple(enclosures),
            checks=items,
        )

    def enclosure(self, name: str) -> Interval:
        for e in self.enclosures:
            if e.name == name:
                return e.value
        raise KeyError(name)

    def find(self, label: str) -> SubCheck:
        """ラベルが一致する最初のサブチェック（深さ優先）"""
        stack = list(reversed(self.checks))
        while stack:
            node = stack.pop()
            if node.label == label:
                return node
            stack.extend(reversed(node.children))
        raise KeyError(label)


@dataclass(frozen=True)
class Report:
    certificates: tuple[Certificate, ...]
    summary: Mapping[str, str] = field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        return Verdict.combine(c.verdict for c in self.certificates)

    def certificate(self, proposition: str) -> Certificate:
        for c in self.certificates:
            if c.proposition == proposition:
                return c
        raise KeyError(proposition)
