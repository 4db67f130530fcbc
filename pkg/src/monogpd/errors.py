"""Error types and validation reports shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field


class MonogpdError(Exception):
    pass


class ShapeMismatch(MonogpdError):
    pass


class OutOfRangeEntry(MonogpdError):
    pass


class SizeMismatch(MonogpdError):
    pass


class NotComposable(MonogpdError):
    pass


class PNotEqual(NotComposable):
    """Deformations only exist between morphisms sharing the same monoid map."""


class InvalidSystem(MonogpdError):
    pass


class InvalidMorphism(MonogpdError):
    pass


class InvalidDeformation(MonogpdError):
    pass


class NotAGroup(MonogpdError):
    pass


class DegreeTooLarge(MonogpdError):
    pass


class TooLarge(MonogpdError):
    pass


class SearchBudgetExceeded(MonogpdError):
    pass


class ParseError(MonogpdError):
    pass


class ValidationError(MonogpdError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(str(report))
        self.report = report


@dataclass(frozen=True)
class Violation:
    condition: str
    where: tuple
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.condition} at {self.where}"
        if self.detail:
            msg += f": {self.detail}"
        return msg


@dataclass
class ValidationReport:
    """Total report: collects every violation instead of failing fast."""

    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, condition: str, where: tuple, detail: str = "") -> None:
        self.violations.append(Violation(condition, tuple(where), detail))

    def raise_if_failed(self) -> None:
        if not self.ok:
            raise ValidationError(self)

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        lines = [str(v) for v in self.violations[:20]]
        if len(self.violations) > 20:
            lines.append(f"... and {len(self.violations) - 20} more")
        return "; ".join(lines)
