"""Named inequality instances with a verdict."""

from __future__ import annotations

from dataclasses import asdict, dataclass

PASS = "pass"
FAIL = "fail"
EQUALITY = "equality"


@dataclass(frozen=True)
class InequalityReport:
    """One audited inequality ``lhs <= rhs``.

    ``atol`` is already scaled to the magnitude of the terms involved; a report
    with ``|slack| <= atol`` is an equality, ``slack < -atol`` a failure.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    verdict: str
    rtol: float
    atol: float
    anchor: str

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL

    def to_dict(self) -> dict:
        return asdict(self)


def check(name: str, lhs: float, rhs: float, scale: float, anchor: str, rtol: float = 1e-9) -> InequalityReport:
    lhs, rhs = float(lhs), float(rhs)
    slack = rhs - lhs
    atol = rtol * abs(float(scale))
    if abs(slack) <= atol:
        verdict = EQUALITY
    elif slack > 0:
        verdict = PASS
    else:
        verdict = FAIL
    return InequalityReport(name, lhs, rhs, slack, verdict, rtol, atol, anchor)


def all_ok(reports) -> bool:
    return all(r.ok for r in reports)
