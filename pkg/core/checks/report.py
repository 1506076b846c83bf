"""Result record of one check suite."""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List


@dataclass
class CheckFailure:
    identifier: str
    expected: str
    got: str
    context: str = ''


@dataclass
class CheckReport:
    suite: str
    cases_run: int = 0
    failures: List[CheckFailure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, identifier: str, expected, got, context: str = '') -> bool:
        self.cases_run += 1
        if not ok:
            self.failures.append(CheckFailure(identifier, str(expected), str(got), context))
        return ok

    def merge(self, other: 'CheckReport') -> None:
        self.cases_run += other.cases_run
        self.failures.extend(other.failures)
        self.elapsed += other.elapsed

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['passed'] = self.passed
        return data
