"""
Convergence traces: best scalar value (and optionally front error) per iteration.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, List, Optional

from moba.core.exceptions import ContractViolationException


@dataclass(frozen=True, slots=True)
class TraceRecord:
    iteration: int
    best_scalar: float
    front_error: Optional[float] = None


class ConvergenceTrace:
    """Ordered records with strictly increasing iterations."""

    def __init__(self, records: Optional[List[TraceRecord]] = None):
        self._records: List[TraceRecord] = []
        for record in records or []:
            self.append(record.iteration, record.best_scalar, record.front_error)

    def append(
        self, iteration: int, best_scalar: float, front_error: Optional[float] = None
    ) -> "ConvergenceTrace":
        if self._records and iteration <= self._records[-1].iteration:
            raise ContractViolationException(
                "Trace iterations must be strictly increasing",
                details={"last": self._records[-1].iteration, "given": iteration},
            )
        self._records.append(TraceRecord(int(iteration), float(best_scalar), front_error))
        return self

    @property
    def records(self) -> List[TraceRecord]:
        return list(self._records)

    @property
    def last(self) -> Optional[TraceRecord]:
        return self._records[-1] if self._records else None

    def best_values(self) -> List[float]:
        return [r.best_scalar for r in self._records]

    def front_errors(self) -> List[Optional[float]]:
        return [r.front_error for r in self._records]

    def at(self, iteration: int) -> Optional[TraceRecord]:
        records = self._records
        # dense traces start at 0, so the index usually is the iteration
        if 0 <= iteration < len(records) and records[iteration].iteration == iteration:
            return records[iteration]
        i = bisect_left(records, iteration, key=lambda r: r.iteration)
        if i < len(records) and records[i].iteration == iteration:
            return records[i]
        return None

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[TraceRecord]:
        return iter(self._records)
