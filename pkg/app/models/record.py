"""
Event log and termination models emitted by a simulation run.
"""

import json
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import TextIO

Payload = Mapping[str, float | int | bool | str]


class EventKind(str, Enum):
    """Kinds of entries in the run event log."""
    DEPART = "depart"
    PICKUP = "pickup"
    COLLECT_FAILED = "collect_failed"
    RETREAT = "retreat"
    DEPOSIT = "deposit"
    ARRIVE = "arrive"
    CHARGED = "charged"
    PARK = "park"
    DEATH = "death"
    FINAL = "final"


class TerminationReason(str, Enum):
    """Why a run stopped."""
    ALL_COLLECTED = "all_collected"
    EEE_STOP = "eee_stop"
    ALL_DEAD = "all_dead"
    TICK_LIMIT = "tick_limit"


@dataclass(frozen=True, slots=True)
class Termination:
    done: bool
    reason: TerminationReason | None = None


@dataclass(frozen=True, slots=True)
class SimulationEvent:
    tick: int
    robot: int
    kind: EventKind
    payload: Payload = field(default_factory=dict)

    def to_tsv(self) -> str:
        payload = json.dumps(dict(self.payload), sort_keys=True, separators=(",", ":"))
        return f"{self.tick}\t{self.robot}\t{self.kind.value}\t{payload}"


class EventLog:
    """Append-only record stream of a run."""

    def __init__(self) -> None:
        self._events: list[SimulationEvent] = []

    def append(self, event: SimulationEvent) -> None:
        self._events.append(event)

    def __iter__(self) -> Iterator[SimulationEvent]:
        return iter(self._events)

    def __len__(self) -> int:
        return len(self._events)

    def of_kind(self, kind: EventKind) -> list[SimulationEvent]:
        return [event for event in self._events if event.kind is kind]

    def write_tsv(self, stream: TextIO) -> None:
        for event in self._events:
            stream.write(event.to_tsv())
            stream.write("\n")
