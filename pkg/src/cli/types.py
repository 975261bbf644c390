from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def as_row(self) -> tuple:
        return self.name, "pass" if self.passed else "FAIL", self.detail
