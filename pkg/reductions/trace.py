"""Reduction traces: an ordered record of stage inputs and outputs, replayable offline."""
from dataclasses import dataclass, field
from typing import Any, Dict, List


def _plain(value):
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, 'item'):
        return value.item()
    return value


@dataclass
class ReductionTrace:
    name: str
    stages: List[Dict[str, Any]] = field(default_factory=list)

    def record(self, stage: str, **payload):
        self.stages.append(dict(stage=stage, **{k: _plain(v) for k, v in payload.items()}))

    def stage(self, name: str) -> Dict[str, Any]:
        for entry in self.stages:
            if entry['stage'] == name:
                return entry
        raise KeyError(name)

    def to_json(self):
        return {'name': self.name, 'stages': self.stages}

    @classmethod
    def from_json(cls, obj) -> 'ReductionTrace':
        return cls(obj['name'], list(obj['stages']))
